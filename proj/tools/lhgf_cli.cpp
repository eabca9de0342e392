#include <CLI11.hpp>
#include <iostream>

#include "lhgf/cubical.hpp"
#include "lhgf/io.hpp"

using namespace lhgf;

namespace {

struct Common {
    std::string complex_file, model_file, group_file, xmod_file;
    std::string field_file, transform_file, cover_file, elgf_file;
    long long budget_limit = 10'000'000;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "emit the report as a single JSON document");
    cmd->add_option("--budget", c.budget_limit, "elementary-check budget (default 10^7)");
}

ModelPtr model_from(const Common& c) {
    if (!c.model_file.empty()) return load_model(read_json_file(c.model_file));
    if (!c.group_file.empty())
        return make_discrete_model(load_group(read_json_file(c.group_file)));
    if (!c.xmod_file.empty())
        return make_two_group_model(load_crossed_module(read_json_file(c.xmod_file)));
    throw Error(Err::ParseError, "one of --model, --group, --xmod is required");
}

Rat parse_grid(const std::string& s) {
    Rat g = parse_rational(s);
    if (g <= Rat(0) || g > Rat(1)) throw Error(Err::ParseError, "grid step must be in (0,1]");
    return g;
}

int emit(const Common& c, const Report& r, const Json& extra = Json::object()) {
    if (c.json) {
        Json out = report_to_json(r);
        for (const auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : extra.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        if (r.ok()) {
            std::cout << "ok\n";
        } else {
            for (const auto& v : r.violations)
                std::cout << "violation: " << v.rule << ": " << v.detail << "\n";
        }
    }
    return r.ok() ? 0 : 1;
}

GlobalField load_global(const Common& c, const SimplicialComplex& parent, const Cover& cover,
                        const ModelPtr& model, const std::vector<std::string>& local_files) {
    GlobalField gf;
    gf.transitions = load_transitions(read_json_file(c.cover_file), cover, model);
    if (local_files.size() != cover.pieces.size())
        throw Error(Err::ParseError, "need one local field file per piece");
    for (size_t i = 0; i < local_files.size(); ++i)
        gf.locals1.push_back(
            load_field1(read_json_file(local_files[i]), cover.pieces[i], model));
    return gf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice higher gauge fields on finite simplicial complexes"};
    app.require_subcommand(1);

    Common c;
    std::string grid = "1/4", word_literal, anchor, element, dim = "1";
    std::vector<std::string> local_files;
    int kmax = 3, sigma_m = 0;
    bool perturb = false;

    auto* validate = app.add_subcommand("validate", "validate a complex / group / field");
    validate->add_option("--complex", c.complex_file);
    validate->add_option("--group", c.group_file);
    validate->add_option("--xmod", c.xmod_file);
    validate->add_option("--model", c.model_file);
    validate->add_option("--field", c.field_file);
    validate->add_option("--dim", dim, "field dimension, 1 or 2");
    add_common(validate, c);

    auto* cub = app.add_subcommand("check-cubical", "verify the site relations on a grid");
    cub->add_option("--kmax", kmax, "max dimension (<= 4)");
    cub->add_option("--grid", grid, "grid step, e.g. 1/4");
    cub->add_flag("--perturb", perturb, "plant the min-for-max defect");
    cub->add_option("--sigma", sigma_m, "also certify the face property of the simplex map");
    add_common(cub, c);

    auto* enumc = app.add_subcommand("enumerate", "count all fields");
    enumc->add_option("--complex", c.complex_file)->required();
    enumc->add_option("--group", c.group_file);
    enumc->add_option("--model", c.model_file);
    enumc->add_option("--xmod", c.xmod_file);
    enumc->add_option("--dim", dim);
    add_common(enumc, c);

    auto* orb = app.add_subcommand("orbits", "gauge orbits of all fields");
    orb->add_option("--complex", c.complex_file)->required();
    orb->add_option("--group", c.group_file);
    orb->add_option("--model", c.model_file);
    add_common(orb, c);

    auto* actc = app.add_subcommand("act", "apply a gauge transformation to a field");
    actc->add_option("--complex", c.complex_file)->required();
    actc->add_option("--group", c.group_file);
    actc->add_option("--model", c.model_file);
    actc->add_option("--field", c.field_file)->required();
    actc->add_option("--transform", c.transform_file)->required();
    add_common(actc, c);

    auto* gluec = app.add_subcommand("glue", "glue a normalized global field");
    gluec->add_option("--complex", c.complex_file)->required();
    gluec->add_option("--cover", c.cover_file)->required();
    gluec->add_option("--group", c.group_file);
    gluec->add_option("--model", c.model_file);
    gluec->add_option("--fields", local_files, "one local field file per piece")->required();
    add_common(gluec, c);

    auto* norm = app.add_subcommand("normalize", "normalize transitions to 1 on vertices");
    norm->add_option("--complex", c.complex_file)->required();
    norm->add_option("--cover", c.cover_file)->required();
    norm->add_option("--group", c.group_file);
    norm->add_option("--model", c.model_file);
    norm->add_option("--fields", local_files)->required();
    add_common(norm, c);

    auto* eq = app.add_subcommand("equalizer", "certify the local-to-global bijection");
    eq->add_option("--complex", c.complex_file)->required();
    eq->add_option("--cover", c.cover_file)->required();
    eq->add_option("--group", c.group_file);
    eq->add_option("--model", c.model_file);
    add_common(eq, c);

    auto* coarse = app.add_subcommand("coarse-grain", "coarse field from its subdivision");
    coarse->add_option("--complex", c.complex_file, "the coarse complex")->required();
    coarse->add_option("--group", c.group_file);
    coarse->add_option("--model", c.model_file);
    coarse->add_option("--field", c.field_file, "field on the barycentric subdivision")
        ->required();
    add_common(coarse, c);

    auto* ext = app.add_subcommand("elgf-extract", "extract the extended field");
    ext->add_option("--complex", c.complex_file)->required();
    ext->add_option("--group", c.group_file);
    ext->add_option("--model", c.model_file);
    ext->add_option("--field", c.field_file)->required();
    add_common(ext, c);

    auto* chk = app.add_subcommand("elgf-check", "check extended-field conditions");
    chk->add_option("--complex", c.complex_file)->required();
    chk->add_option("--group", c.group_file);
    chk->add_option("--model", c.model_file);
    chk->add_option("--elgf", c.elgf_file)->required();
    add_common(chk, c);

    auto* cls = app.add_subcommand("classify", "bundle classification label");
    cls->add_option("--complex", c.complex_file)->required();
    cls->add_option("--cover", c.cover_file, "finite-group case");
    cls->add_option("--group", c.group_file);
    cls->add_option("--model", c.model_file);
    cls->add_option("--field", c.field_file, "circle case: field with face_disp");
    add_common(cls, c);

    auto* tra = app.add_subcommand("transport", "parallel transport of fiber data");
    tra->add_option("--complex", c.complex_file)->required();
    tra->add_option("--group", c.group_file);
    tra->add_option("--model", c.model_file);
    tra->add_option("--field", c.field_file)->required();
    tra->add_option("--word", word_literal, "word literal: v1>v2(.v2>v3|~)*")->required();
    tra->add_option("--anchor", anchor)->required();
    tra->add_option("--element", element, "level-0 element carried by the fiber data")
        ->required();
    add_common(tra, c);

    CLI11_PARSE(app, argc, argv);

    try {
        Budget budget{c.budget_limit, 0};

        if (validate->parsed()) {
            Report r;
            Json extra = Json::object();
            SimplicialComplex cx;
            if (!c.complex_file.empty()) {
                cx = load_complex(read_json_file(c.complex_file));
                r.merge(cx.validate());
                extra["dim"] = cx.dim();
            }
            if (!c.group_file.empty()) r.merge(load_group(read_json_file(c.group_file)).validate());
            if (!c.xmod_file.empty())
                r.merge(load_crossed_module(read_json_file(c.xmod_file)).validate());
            if (!c.field_file.empty()) {
                ModelPtr m = model_from(c);
                if (dim == "2")
                    r.merge(validate_field2(load_field2(read_json_file(c.field_file), cx, m)));
                else
                    r.merge(validate_field1(load_field1(read_json_file(c.field_file), cx, m)));
            }
            return emit(c, r, extra);
        }

        if (cub->parsed()) {
            if (kmax > 4) throw Error(Err::ParseError, "--kmax must be <= 4");
            Report r = check_site_relations(kmax, parse_grid(grid), perturb);
            if (sigma_m > 0) r.merge(sigma_face_property(sigma_m, parse_grid(grid)));
            return emit(c, r, Json{{"kmax", kmax}, {"grid", grid}});
        }

        if (enumc->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            long long count = dim == "2"
                                  ? static_cast<long long>(enumerate_fields2(cx, m, &budget).size())
                                  : static_cast<long long>(enumerate_fields1(cx, m, &budget).size());
            return emit(c, Report{}, Json{{"count", count}});
        }

        if (orb->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            auto os = orbits(cx, m, budget);
            Json sizes = Json::array();
            for (const auto& o : os) sizes.push_back(o.size());
            return emit(c, Report{},
                        Json{{"orbits", static_cast<long long>(os.size())}, {"sizes", sizes}});
        }

        if (actc->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            GaugeField1 a = load_field1(read_json_file(c.field_file), cx, m);
            GaugeTransform u = load_transform(read_json_file(c.transform_file), cx, m);
            Report r = validate_transform(u);
            if (!r.ok()) return emit(c, r);
            return emit(c, Report{}, Json{{"field", field1_to_json(act(u, a))}});
        }

        if (gluec->parsed() || norm->parsed() || eq->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            Cover cover = load_cover(read_json_file(c.cover_file), cx);
            Report cr = cover.validate();
            if (!cr.ok()) return emit(c, cr);
            ModelPtr m = model_from(c);
            if (eq->parsed()) {
                auto res = equalizer_check(cx, cover, m, budget);
                std::string line = std::string(res.bijective ? "bijection certified: "
                                                             : "bijection FAILED: ") +
                                   std::to_string(res.global_count) + " = " +
                                   std::to_string(res.limit_count);
                return emit(c, res.report, Json{{"result", line},
                                                {"global", res.global_count},
                                                {"limit", res.limit_count}});
            }
            GlobalField gf = load_global(c, cx, cover, m, local_files);
            if (norm->parsed()) {
                NormalizeResult nr = normalize_transitions(gf);
                Json transforms = Json::array();
                for (const auto& u : nr.transforms) transforms.push_back(transform_to_json(u));
                Json locals = Json::array();
                for (const auto& f : nr.field.locals1) locals.push_back(field1_to_json(f));
                return emit(c, Report{}, Json{{"transforms", transforms}, {"locals", locals}});
            }
            return emit(c, Report{}, Json{{"field", field1_to_json(glue_to_single(gf))}});
        }

        if (coarse->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            Subdivision sub = barycentric_subdivide(cx);
            ModelPtr m = model_from(c);
            GaugeField1 fine = load_field1(read_json_file(c.field_file), sub.complex, m);
            return emit(c, Report{},
                        Json{{"field", field1_to_json(coarse_grain(fine, sub, cx))}});
        }

        if (ext->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            GaugeField1 a = load_field1(read_json_file(c.field_file), cx, m);
            return emit(c, Report{}, Json{{"elgf", elgf_to_json(extract_elgf(a))}});
        }

        if (chk->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            ELGF e = load_elgf(read_json_file(c.elgf_file), cx, m);
            return emit(c, check_elgf(e));
        }

        if (cls->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            if (!c.cover_file.empty()) {
                Cover cover = load_cover(read_json_file(c.cover_file), cx);
                TransitionSystem ts = load_transitions(read_json_file(c.cover_file), cover, m);
                return emit(c, Report{},
                            Json{{"label", classify_transitions(ts, budget)}});
            }
            if (c.field_file.empty())
                throw Error(Err::ParseError, "classify needs --cover or --field");
            GaugeField1 a = load_field1(read_json_file(c.field_file), cx, m);
            return emit(c, Report{}, Json{{"label", classify_circle(a)}});
        }

        if (tra->parsed()) {
            SimplicialComplex cx = load_complex(read_json_file(c.complex_file));
            ModelPtr m = model_from(c);
            GaugeField1 a = load_field1(read_json_file(c.field_file), cx, m);
            EdgeWord w = parse_word(cx, word_literal);
            int av = cx.vertex_index(anchor);
            if (av < 0) throw Error(Err::ParseError, "unknown anchor vertex '" + anchor + "'");
            FiberHomotopyData phi{av, m->parse_level0(element)};
            FiberHomotopyData out = parallel_transport(a, w, phi);
            return emit(c, Report{}, Json{{"anchor", cx.name(out.anchor)},
                                          {"element", m->show(out.element)}});
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == Err::BudgetExceeded) return 3;
        if (e.code() == Err::ParseError) return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
