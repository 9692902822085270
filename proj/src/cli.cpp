#include "catrep/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "catrep/json_io.hpp"

namespace catrep {

namespace {

std::string fnv1a_digest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return "fnv1a:" + os.str();
}

struct Inputs {
    std::map<std::string, std::string> digests;

    json load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ValidationError("io", "cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        digests[path] = fnv1a_digest(buf.str());
        return json::parse(buf.str());
    }
};

json report_skeleton(const std::string& command, const Inputs& inputs) {
    json inputs_json = json::object();
    for (const auto& [path, digest] : inputs.digests) inputs_json[path] = digest;
    return json{{"command", command}, {"inputs", inputs_json}};
}

void emit(std::ostream& out, const json& report, const std::string& text, bool json_format) {
    if (json_format)
        out << report.dump(2) << "\n";
    else
        out << text;
}

std::string describe_classification(const XModClass& c) {
    std::vector<std::string> tags;
    if (c.transitive) tags.push_back("transitive");
    if (c.intransitive) tags.push_back("intransitive");
    if (c.free) tags.push_back("free");
    if (tags.empty()) tags.push_back("none-of-these");
    std::string s;
    for (size_t i = 0; i < tags.size(); ++i) s += (i ? ", " : "") + tags[i];
    return s;
}

std::string pattern_text(const NatMatrix& p) {
    std::ostringstream os;
    for (int i = 0; i < p.rows; ++i) {
        os << "    [";
        for (int j = 0; j < p.cols; ++j) {
            if (p.at(i, j) == 0)
                os << (j ? " " : "") << "0";
            else
                os << (j ? " " : "") << "n" << p.at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

int run_validate(const std::string& path, bool json_format, std::ostream& out) {
    Inputs inputs;
    json data = inputs.load(path);
    XModPtr xm = xmod_from_json(data);
    XModClass cls = classify(*xm);
    json report = report_skeleton("validate", inputs);
    report["result"] = {{"valid", true},
                        {"E_order", xm->principal->order},
                        {"G_order", xm->base->order},
                        {"transitive", cls.transitive},
                        {"intransitive", cls.intransitive},
                        {"free", cls.free}};
    std::ostringstream text;
    text << "crossed module is valid: |E| = " << xm->principal->order << ", |G| = " << xm->base->order
         << ", " << describe_classification(cls) << "\n";
    emit(out, report, text.str(), json_format);
    return 0;
}

int run_enumerate(const std::string& path, int dim, const std::string& up_to, bool json_format,
                  std::ostream& out) {
    Inputs inputs;
    XModPtr xm = xmod_from_json(inputs.load(path));
    UpTo mode = up_to == "iso" ? UpTo::isomorphism : UpTo::equality;
    auto reps = enumerate_reps(xm, dim, mode);
    json rep_list = json::array();
    for (const auto& r : reps) rep_list.push_back(to_json(r));
    json report = report_skeleton("enumerate", inputs);
    report["result"] = {{"dim", dim}, {"up_to", up_to}, {"count", reps.size()}, {"representations", rep_list}};
    std::ostringstream text;
    text << reps.size() << " representation(s) of dimension " << dim << " up to " << up_to << "\n";
    for (size_t i = 0; i < reps.size(); ++i) {
        text << "  #" << i << " base=[";
        for (size_t x = 0; x < reps[i].base.perm.size(); ++x) {
            text << (x ? " " : "");
            for (int p : reps[i].base.perm[x]) text << p;
        }
        text << "] chars=[";
        for (size_t c = 0; c < reps[i].chars.size(); ++c) {
            text << (c ? " " : "");
            for (int k : reps[i].chars[c].expmap) text << k;
        }
        text << "]\n";
    }
    emit(out, report, text.str(), json_format);
    return 0;
}

int run_chars(const std::string& path, bool json_format, std::ostream& out) {
    Inputs inputs;
    XModPtr xm = xmod_from_json(inputs.load(path));
    auto reps = classify_one_dimensional(xm);
    json rep_list = json::array();
    for (const auto& r : reps) rep_list.push_back(to_json(r));
    json report = report_skeleton("chars", inputs);
    report["result"] = {{"count", reps.size()}, {"representations", rep_list}};
    std::ostringstream text;
    text << reps.size() << " one-dimensional representation(s), one per invariant character of E\n";
    for (size_t i = 0; i < reps.size(); ++i) {
        text << "  #" << i << " exponents=[";
        for (int k : reps[i].chars[0].expmap) text << k;
        text << "] (mod " << reps[i].chars[0].modulus << ")\n";
    }
    emit(out, report, text.str(), json_format);
    return 0;
}

int run_tensor(const std::string& rep_a, const std::string& rep_b, const std::string& xmod_path,
               bool decompose_flag, bool json_format, std::ostream& out) {
    Inputs inputs;
    XModPtr xm = xmod_from_json(inputs.load(xmod_path));
    CatRep a = rep_from_json(xm, inputs.load(rep_a));
    CatRep b = rep_from_json(xm, inputs.load(rep_b));
    CatRep prod = boxtimes_rep(a, b);
    json report = report_skeleton("tensor", inputs);
    report["result"] = {{"product", to_json(prod)}};
    std::ostringstream text;
    text << "monoidal product has dimension " << prod.dim << "\n";
    if (decompose_flag) {
        Decomposition d = decompose(prod);
        json parts = json::array();
        for (const auto& p : d.parts) parts.push_back(to_json(p));
        report["result"]["decomposition"] = {{"parts", parts}, {"witness_perm", d.witness_perm}};
        text << "decomposes into " << d.parts.size() << " indecomposable part(s) of dimension(s)";
        for (const auto& p : d.parts) text << " " << p.dim;
        text << "\n";
    }
    emit(out, report, text.str(), json_format);
    return 0;
}

int run_hom(const std::string& rep_a, const std::string& rep_b, const std::string& xmod_path,
            bool json_format, std::ostream& out) {
    Inputs inputs;
    XModPtr xm = xmod_from_json(inputs.load(xmod_path));
    CatRep a = rep_from_json(xm, inputs.load(rep_a));
    CatRep b = rep_from_json(xm, inputs.load(rep_b));
    AdmissibleShapes adm = admissible_shapes(a, b);
    json orbits_json = json::array();
    for (const auto& o : adm.orbits) {
        json cells = json::array();
        for (auto [i, j] : o.cells) cells.push_back(json::array({i, j}));
        orbits_json.push_back(
            {{"cells", cells}, {"admissible", o.admissible}, {"obstruction", o.obstruction}});
    }
    NatMatrix pattern = adm.parameter_pattern();
    json report = report_skeleton("hom", inputs);
    report["result"] = {{"pattern", to_json(pattern)}, {"orbits", orbits_json}};
    std::ostringstream text;
    text << "admissible 1-intertwiner shapes (one free natural parameter per nonzero label):\n"
         << pattern_text(pattern);
    emit(out, report, text.str(), json_format);
    return 0;
}

int run_iso(const std::string& rep_a, const std::string& rep_b, const std::string& xmod_path,
            bool json_format, std::ostream& out) {
    Inputs inputs;
    XModPtr xm = xmod_from_json(inputs.load(xmod_path));
    CatRep a = rep_from_json(xm, inputs.load(rep_a));
    CatRep b = rep_from_json(xm, inputs.load(rep_b));
    IsoResult iso = is_isomorphic(a, b);
    json report = report_skeleton("iso", inputs);
    report["result"] = {{"isomorphic", iso.isomorphic}};
    std::ostringstream text;
    if (iso.isomorphic) {
        report["result"]["witness"] = to_json(*iso.witness);
        text << "isomorphic; invertible 1-intertwiner witness with permutation shape\n";
    } else {
        text << "not isomorphic\n";
    }
    emit(out, report, text.str(), json_format);
    return 0;
}

struct Check {
    std::string name;
    bool pass;
};

std::vector<Check> g23_regression();

int run_verify_g23(bool json_format, std::ostream& out) {
    auto checks = g23_regression();
    json list = json::array();
    int failed = 0;
    std::ostringstream text;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"pass", c.pass}});
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
        if (!c.pass) ++failed;
    }
    text << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n");
    json report{{"command", "verify-g23"},
                {"inputs", json::object()},
                {"result", {{"checks", list}, {"failed", failed}}}};
    emit(out, report, text.str(), json_format);
    return failed == 0 ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact representation theory of finite categorical groups"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string xmod_path, rep_a, rep_b;
    int dim = 1;
    std::string up_to = "equality";
    bool decompose_flag = false;

    auto* validate_cmd = app.add_subcommand("validate", "validate a crossed-module file");
    validate_cmd->add_option("xmod", xmod_path, "crossed-module JSON file")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate strict representations of a dimension");
    enum_cmd->add_option("xmod", xmod_path, "crossed-module JSON file")->required();
    enum_cmd->add_option("--dim", dim, "dimension")->required();
    enum_cmd->add_option("--up-to", up_to, "equality or iso")->check(CLI::IsMember({"equality", "iso"}));

    auto* chars_cmd = app.add_subcommand("chars", "classify one-dimensional representations");
    chars_cmd->add_option("xmod", xmod_path, "crossed-module JSON file")->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "monoidal product of two representation files");
    tensor_cmd->add_option("repA", rep_a, "representation JSON file")->required();
    tensor_cmd->add_option("repB", rep_b, "representation JSON file")->required();
    tensor_cmd->add_option("--xmod", xmod_path, "crossed-module JSON file")->required();
    tensor_cmd->add_flag("--decompose", decompose_flag, "split the product into indecomposables");

    auto* hom_cmd = app.add_subcommand("hom", "admissible 1-intertwiner shapes between two representations");
    hom_cmd->add_option("repA", rep_a, "representation JSON file")->required();
    hom_cmd->add_option("repB", rep_b, "representation JSON file")->required();
    hom_cmd->add_option("--xmod", xmod_path, "crossed-module JSON file")->required();

    auto* iso_cmd = app.add_subcommand("iso", "test two representations for isomorphism");
    iso_cmd->add_option("repA", rep_a, "representation JSON file")->required();
    iso_cmd->add_option("repB", rep_b, "representation JSON file")->required();
    iso_cmd->add_option("--xmod", xmod_path, "crossed-module JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify-g23", "run the built-in worked-example regression");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    bool json_format = format == "json";
    try {
        if (validate_cmd->parsed()) return run_validate(xmod_path, json_format, out);
        if (enum_cmd->parsed()) return run_enumerate(xmod_path, dim, up_to, json_format, out);
        if (chars_cmd->parsed()) return run_chars(xmod_path, json_format, out);
        if (tensor_cmd->parsed()) return run_tensor(rep_a, rep_b, xmod_path, decompose_flag, json_format, out);
        if (hom_cmd->parsed()) return run_hom(rep_a, rep_b, xmod_path, json_format, out);
        if (iso_cmd->parsed()) return run_iso(rep_a, rep_b, xmod_path, json_format, out);
        if (verify_cmd->parsed()) return run_verify_g23(json_format, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "invalid input [" << e.axiom() << "] " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "invalid input [parse] " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

std::vector<Check> g23_regression() {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool pass) { checks.push_back({name, pass}); };

    XModPtr xm = g23();
    XModClass cls = classify(*xm);
    add("crossed module valid and intransitive", cls.intransitive && !cls.transitive && !cls.free);

    add("six morphisms in total", all_morphisms(xm).size() == 6);
    add("no morphisms between distinct objects", hom_set(xm, 0, 1).empty());
    add("three endomorphisms of the object -1", hom_set(xm, 1, 1).size() == 3);

    bool interchange = true;
    for (const auto& f : all_morphisms(xm))
        for (const auto& g : all_morphisms(xm))
            for (const auto& h : all_morphisms(xm))
                for (const auto& k : all_morphisms(xm)) {
                    if (f.target() != h.source || g.target() != k.source) continue;
                    auto lhs = compose(tensor(f, g), tensor(h, k));
                    auto rhs = tensor(compose(f, h), compose(g, k));
                    if (!(lhs == rhs)) interchange = false;
                }
    add("interchange law", interchange);

    auto one_dim = classify_one_dimensional(xm);
    add("exactly one 1-dimensional representation", one_dim.size() == 1 && one_dim[0].chars[0].is_trivial());

    auto reps2 = enumerate_reps(xm, 2, UpTo::equality);
    add("exactly four 2-dimensional representations", reps2.size() == 4);
    auto classes2 = enumerate_reps(xm, 2, UpTo::isomorphism);
    add("exactly three isomorphism classes", classes2.size() == 3);

    if (reps2.size() == 4) {
        const CatRep& v2 = reps2[0];      // trivial base, trivial characters
        const CatRep& v2_1 = reps2[1];    // swap base, trivial character
        const CatRep& v2_w = reps2[2];    // swap base, character w
        const CatRep& v2_w2 = reps2[3];   // swap base, character w^2
        add("V(2)_w isomorphic to V(2)_w2", is_isomorphic(v2_w, v2_w2).isomorphic);
        const CatRep& v1 = one_dim[0];
        add("V(2) isomorphic to V(1) [+] V(1)", is_isomorphic(boxplus_rep(v1, v1), v2).isomorphic);
        add("V(2) decomposable", is_decomposable(v2));
        add("V(2)_1, V(2)_w, V(2)_w2 indecomposable",
            !is_decomposable(v2_1) && !is_decomposable(v2_w) && !is_decomposable(v2_w2));
        add("V(2)_w irreducible", is_irreducible(v2_w));
        add("V(2)_1 reducible", !is_irreducible(v2_1) && reducibility_witness(v2_1).has_value());

        auto tt = boxtimes_rep(v2_w, v2_w);
        auto dec = decompose(tt);
        add("V(2)_w [x] V(2)_w = V(2)_w2 [+] V(2)_1",
            dec.parts.size() == 2 && rep_equal(dec.parts[0], v2_w2) && rep_equal(dec.parts[1], v2_1));

        NatMatrix diag = admissible_shapes(v2_w, v2_w).parameter_pattern();
        NatMatrix anti = admissible_shapes(v2_w, v2_w2).parameter_pattern();
        NatMatrix full = admissible_shapes(v2_1, v2_1).parameter_pattern();
        NatMatrix none = admissible_shapes(v1, v2_w).parameter_pattern();
        bool shapes_ok = diag.at(0, 0) != 0 && diag.at(1, 1) != 0 && diag.at(0, 1) == 0 &&
                         anti.at(0, 1) != 0 && anti.at(1, 0) != 0 && anti.at(0, 0) == 0 &&
                         full.at(0, 0) != 0 && full.at(0, 1) != 0 &&
                         none.at(0, 0) == 0 && none.at(0, 1) == 0;
        add("hom-shape tables match the worked example", shapes_ok);
    }

    return checks;
}

} // namespace

} // namespace catrep
