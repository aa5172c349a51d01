#include "zxlat/cli.hpp"

#include "zxlat/io.hpp"
#include "zxlat/saturation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace zxlat {

namespace {

using Handler = std::function<Json(const Json&, std::optional<int>)>;

Json lattice_json(const Ghnf& g) { return Json{{"lattice", columns_to_json(g.columns)}, {"rank", g.rank()}}; }

Ghnf ghnf_of(const Json& doc) {
    ColumnsDoc d = columns_from_json(doc);
    return groebner(d.columns, d.n, false).basis;
}

DefiningMatrix matrix_of(const Json& doc) {
    ColumnsDoc d = columns_from_json(doc);
    return DefiningMatrix{d.n, d.columns};
}

Json matrix_json(const DefiningMatrix& a) {
    return Json{{"rows", a.rows}, {"columns", columns_to_json(a.columns)}};
}

Json ghnf_cmd(const Json& doc, std::optional<int>) {
    ColumnsDoc d = columns_from_json(doc);
    GroebnerResult r = groebner(d.columns, d.n);
    Json transform = Json::array();
    for (const auto& row : r.log.coeffs) {
        Json a = Json::array();
        for (const auto& p : row) a.push_back(poly_to_json(p));
        transform.push_back(a);
    }
    Json j = lattice_json(r.basis);
    j["transform"] = transform;
    return j;
}

Json kernel_cmd(const Json& doc, std::optional<int>) {
    ColumnsDoc d = columns_from_json(doc);
    return Json{{"kernel", columns_to_json(kernel_syzygy(d.columns, d.n))}};
}

Handler sat_cmd(Ghnf (*f)(const std::vector<ZxVec>&, std::size_t)) {
    return [f](const Json& doc, std::optional<int>) {
        ColumnsDoc d = columns_from_json(doc);
        return lattice_json(f(d.columns, d.n));
    };
}

Json pcheck_cmd(const Json& doc, std::optional<int> family) {
    PCheckResult r = p_saturation_check(ghnf_of(doc), family.value_or(1));
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back(Json{{"g", vec_to_json(c.g)}, {"m", c.m.get_str()}, {"o", c.o.get_str()}, {"holds", c.holds}});
    return Json{{"p_saturated", r.p_saturated}, {"certificates", certs}};
}

Json charset_cmd(const Json& doc, std::optional<int> family) {
    return Json{{"chain", presentation_to_json(char_set(presentation_from_json(doc, family)))}};
}

Json classify_cmd(const Json& doc, std::optional<int> family) {
    return classification_to_json(classify(presentation_from_json(doc, family)));
}

Json reflexive_cmd(const Json& doc, std::optional<int> family) {
    return presentation_to_json(reflexive_closure(presentation_from_json(doc, family)));
}

Json declaurent_cmd(const Json& doc, std::optional<int> family) {
    Json comps = Json::array();
    for (const auto& c : dec_laurent(presentation_from_json(doc, family))) comps.push_back(presentation_to_json(c));
    return Json{{"components", comps}};
}

Json perfect_cmd(const Json& doc, std::optional<int> family) {
    auto r = perfect_closure(presentation_from_json(doc, family));
    return Json{{"closure", r ? presentation_to_json(*r) : Json("[1]")}};
}

Json implicitize_cmd(const Json& doc, std::optional<int>) { return presentation_to_json(implicitize(matrix_of(doc))); }

Json parametrize_cmd(const Json& doc, std::optional<int>) {
    return Json{{"matrix", matrix_json(parametrize(ghnf_of(doc)))}};
}

Json orderbound_cmd(const Json& doc, std::optional<int>) {
    return Json{{"order_bound", order_bound(matrix_of(doc))}};
}

const std::map<std::string, std::pair<Handler, std::string>>& commands() {
    static const std::map<std::string, std::pair<Handler, std::string>> table = {
        {"ghnf", {ghnf_cmd, "reduced Groebner basis (GHNF) of a lattice"}},
        {"kernel", {kernel_cmd, "syzygy module of the columns"}},
        {"satx", {sat_cmd(sat_x), "x-saturation"}},
        {"satz", {sat_cmd(sat_z), "Z-saturation"}},
        {"satzx", {sat_cmd(sat_zx), "Z[x]-saturation"}},
        {"sat", {sat_cmd(full_sat), "x- then Z-saturation"}},
        {"pcheck", {pcheck_cmd, "P-saturation check of an x-saturated lattice"}},
        {"charset", {charset_cmd, "characteristic set of a Laurent binomial presentation"}},
        {"classify", {classify_cmd, "proper, prime, reflexive, perfect, toric flags"}},
        {"reflexive", {reflexive_cmd, "reflexive closure"}},
        {"declaurent", {declaurent_cmd, "reflexive prime components"}},
        {"perfect", {perfect_cmd, "perfect closure"}},
        {"implicitize", {implicitize_cmd, "toric ideal of a monomial parametrization"}},
        {"parametrize", {parametrize_cmd, "monomial parametrization of a toric lattice"}},
        {"orderbound", {orderbound_cmd, "order bound of a parametrization matrix"}},
    };
    return table;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Z[x] lattices and binomial difference ideals", "zxlat"};
    app.require_subcommand(1);
    std::string in_path, out_path, family_text;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands()) {
        CLI::App* s = app.add_subcommand(name, entry.second);
        s->add_option("--in", in_path, "input JSON file (default: standard input)");
        s->add_option("--out", out_path, "output file (default: standard output)");
        s->add_option("--family", family_text, "difference family +1 or -1 (default +1)");
        subs[name] = s;
    }

    if (!args.empty() && args[0].rfind("-", 0) != 0 && !commands().count(args[0])) {
        err << "zxlat: unknown subcommand '" << args[0] << "'\n";
        return kExitUsage;
    }
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "zxlat: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string name;
    for (const auto& [n, s] : subs)
        if (s->parsed()) name = n;

    try {
        std::optional<int> family;
        if (!family_text.empty()) family = family_from_json(Json(family_text));

        Json doc;
        if (in_path.empty()) {
            doc = Json::parse(in);
        } else {
            std::ifstream f(in_path);
            if (!f) throw ParseError("cannot open " + in_path);
            doc = Json::parse(f);
        }

        Json result = commands().at(name).first(doc, family);
        std::string text = result.dump() + "\n";
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw ParseError("cannot write " + out_path);
            f << text;
        }
        return kExitOk;
    } catch (const UnsupportedCoefficient& e) {
        err << "zxlat: unsupported coefficient field: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Json::exception& e) {
        err << "zxlat: invalid JSON: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "zxlat: " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace zxlat
