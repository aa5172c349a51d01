#include "zxlat/io.hpp"

#include "zxlat/factor.hpp"

#include <regex>

namespace zxlat {

namespace {

const std::regex kIntRe(R"(^\s*[+-]?\d+\s*$)");
const std::regex kRatRe(R"(^\s*[+-]?\d+(\s*/\s*\d+)?\s*$)");

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    if (!r.empty() && r[0] == '+') r.erase(0, 1);
    return r;
}

Int int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
        return Int(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, kIntRe)) throw ParseError(std::string(what) + ": not an integer: \"" + s + "\"");
        return Int(strip(s));
    }
    throw ParseError(std::string(what) + ": expected an integer, got " + j.dump());
}

// Rationals inside coefficient objects; floats are outside the model.
Rat rat_from_json(const Json& j, const char* what) {
    if (j.is_number_float()) throw UnsupportedCoefficient(std::string(what) + ": floating-point value " + j.dump());
    if (j.is_number_integer()) return Rat(int_from_json(j, what));
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, kRatRe)) throw UnsupportedCoefficient(std::string(what) + ": not a rational: \"" + s + "\"");
        std::string t = strip(s);
        auto slash = t.find('/');
        Int num(t.substr(0, slash));
        Int den = slash == std::string::npos ? Int(1) : Int(t.substr(slash + 1));
        if (den == 0) throw ParseError(std::string(what) + ": zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    throw UnsupportedCoefficient(std::string(what) + ": unsupported value " + j.dump());
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

} // namespace

Json poly_to_json(const ZPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(int_to_json(c));
    return a;
}

ZPoly poly_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_zpoly(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("polynomial: ") + e.what());
        }
    }
    if (j.is_number_integer()) return ZPoly(int_from_json(j, "polynomial"));
    if (!j.is_array()) throw ParseError("polynomial: expected a coefficient array or string, got " + j.dump());
    std::vector<Int> c;
    for (const auto& e : j) c.push_back(int_from_json(e, "polynomial coefficient"));
    return ZPoly(std::move(c));
}

Json vec_to_json(const ZxVec& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(poly_to_json(p));
    return a;
}

ZxVec vec_from_json(const Json& j, std::optional<std::size_t> n) {
    if (!j.is_array()) throw ParseError("vector: expected an array, got " + j.dump());
    ZxVec v;
    for (const auto& e : j) v.push_back(poly_from_json(e));
    if (n && v.size() != *n)
        throw ParseError("vector: expected length " + std::to_string(*n) + ", got " + std::to_string(v.size()));
    return v;
}

Json columns_to_json(const std::vector<ZxVec>& cols) {
    Json a = Json::array();
    for (const auto& c : cols) a.push_back(vec_to_json(c));
    return a;
}

ColumnsDoc columns_from_json(const Json& j) {
    ColumnsDoc d;
    const Json* cols = &j;
    std::optional<std::size_t> n;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            (void)v;
            if (k != "n" && k != "columns") throw ParseError("lattice: unknown field \"" + k + "\"");
        }
        if (!j.contains("columns")) throw ParseError("lattice: missing \"columns\"");
        cols = &j.at("columns");
        if (j.contains("n")) {
            Int nv = int_from_json(j.at("n"), "n");
            if (nv < 0 || !nv.fits_slong_p()) throw ParseError("n: must be a nonnegative integer");
            n = static_cast<std::size_t>(nv.get_si());
        }
    }
    if (!cols->is_array()) throw ParseError("lattice: expected an array of columns");
    for (const auto& c : *cols) {
        ZxVec v = vec_from_json(c, n);
        if (!n) n = v.size();
        d.columns.push_back(std::move(v));
    }
    if (!n) throw ParseError("lattice: no columns; use {\"n\": ..., \"columns\": []}");
    d.n = *n;
    return d;
}

Json coeff_to_json(const CoeffElem& c) {
    Json rational = Json::object();
    for (const auto& [p, e] : c.rational) rational[p.get_str()] = e.get_str();
    Json trans = Json::object();
    for (const auto& [name, e] : c.trans) {
        Json coeffs = Json::array();
        for (const auto& q : e.coeffs) coeffs.push_back(q.get_str());
        trans[name] = Json{{"lo", e.lo}, {"coeffs", coeffs}};
    }
    return Json{{"torsion", c.torsion.get_str()}, {"rational", rational}, {"trans", trans}};
}

CoeffElem coeff_from_json(const Json& j) {
    if (!j.is_object()) {
        Rat q = rat_from_json(j, "coefficient");
        if (q == 0) throw ParseError("coefficient: zero is not allowed");
        return CoeffElem::from_rational(q);
    }
    CoeffElem c;
    for (const auto& [k, v] : j.items()) {
        if (k == "torsion") {
            c = c * CoeffElem::root_of_unity(rat_from_json(v, "torsion"));
        } else if (k == "rational") {
            if (!v.is_object()) throw UnsupportedCoefficient("rational: expected an object");
            for (const auto& [base, e] : v.items()) {
                if (!std::regex_match(base, kIntRe)) throw UnsupportedCoefficient("rational: bad base \"" + base + "\"");
                Int b(strip(base));
                if (b < 2) throw UnsupportedCoefficient("rational: base must be at least 2");
                Rat ex = rat_from_json(e, "rational exponent");
                for (const auto& [p, m] : prime_factors(b)) {
                    CoeffElem f;
                    f.rational[p] = ex * Rat(m);
                    if (ex != 0) c = c * f;
                }
            }
        } else if (k == "trans") {
            if (!v.is_object()) throw UnsupportedCoefficient("trans: expected an object");
            for (const auto& [name, e] : v.items()) {
                if (name.empty()) throw ParseError("trans: empty generator name");
                if (!e.is_object()) throw UnsupportedCoefficient("trans: expected {\"lo\", \"coeffs\"}");
                LaurentQPoly lp;
                for (const auto& [ek, ev] : e.items()) {
                    if (ek == "lo") {
                        Int lo = int_from_json(ev, "lo");
                        if (!lo.fits_slong_p()) throw ParseError("lo: out of range");
                        lp.lo = lo.get_si();
                    } else if (ek == "coeffs") {
                        if (!ev.is_array()) throw UnsupportedCoefficient("coeffs: expected an array");
                        for (const auto& q : ev) lp.coeffs.push_back(rat_from_json(q, "trans coefficient"));
                    } else {
                        throw UnsupportedCoefficient("trans: unknown field \"" + ek + "\"");
                    }
                }
                lp.canonicalize();
                c = c * CoeffElem::generator(name, lp);
            }
        } else {
            throw UnsupportedCoefficient("coefficient: unknown field \"" + k + "\"");
        }
    }
    return c;
}

int family_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "+1" || s == "1") return 1;
        if (s == "-1") return -1;
    } else if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v == 1 || v == -1) return static_cast<int>(v);
    }
    throw ParseError("family: expected \"+1\" or \"-1\", got " + j.dump());
}

std::string family_to_string(int family) { return family == 1 ? "+1" : "-1"; }

Json binomial_to_json(const LaurentBinomial& b) {
    return Json{{"support", vec_to_json(b.support)}, {"coeff", coeff_to_json(b.coeff)}};
}

Json presentation_to_json(const Presentation& p) {
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(binomial_to_json(g));
    return Json{{"n", p.n}, {"family", family_to_string(p.family)}, {"generators", gens}};
}

Presentation presentation_from_json(const Json& j, std::optional<int> family) {
    if (!j.is_object()) throw ParseError("presentation: expected an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "n" && k != "family" && k != "generators")
            throw ParseError("presentation: unknown field \"" + k + "\"");
    }
    if (!j.contains("n") || !j.contains("generators")) throw ParseError("presentation: needs \"n\" and \"generators\"");
    Int n = int_from_json(j.at("n"), "n");
    if (n < 1 || !n.fits_slong_p()) throw ParseError("n: must be a positive integer");
    Presentation p;
    p.n = static_cast<std::size_t>(n.get_si());
    p.family = family ? *family : (j.contains("family") ? family_from_json(j.at("family")) : 1);
    const Json& gens = j.at("generators");
    if (!gens.is_array()) throw ParseError("generators: expected an array");
    for (const auto& g : gens) {
        if (!g.is_object() || !g.contains("support") || !g.contains("coeff"))
            throw ParseError("binomial: expected {\"support\", \"coeff\"}");
        for (const auto& [k, v] : g.items()) {
            (void)v;
            if (k != "support" && k != "coeff") throw ParseError("binomial: unknown field \"" + k + "\"");
        }
        ZxVec f = vec_from_json(g.at("support"), p.n);
        if (is_zero(f)) throw ParseError("binomial: zero support");
        p.generators.push_back(make_binomial(f, coeff_from_json(g.at("coeff"))));
    }
    return p;
}

Json classification_to_json(const Classification& c) {
    return Json{{"proper", c.proper},       {"prime", c.prime}, {"reflexive", c.reflexive},
                {"perfect", c.perfect},     {"toric", c.toric}, {"dimension", c.dimension},
                {"notes", c.notes}};
}

} // namespace zxlat
