// Command-line front end: kernel evaluation, energy minimization, analysis
// sweeps, and plot-data export. JSON experiment files in, CSV tables out.

#include "CLI11.hpp"
#include "json.hpp"

#include "riesz/analysis.hpp"
#include "riesz/energy.hpp"
#include "riesz/geometry.hpp"
#include "riesz/kernel.hpp"
#include "riesz/optimize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace riesz;

/// Bad experiment file or flags: exit code 1 (vs. 2 for numerical errors).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

/// Rejects unknown fields so schema typos never pass silently.
void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    if (!obj.is_object()) throw UsageError(where + ": expected a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw UsageError(where + ": unknown field '" + it.key() + "'");
    }
}

double need_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw UsageError(where + ": missing field '" + key + "'");
    if (!obj[key].is_number()) throw UsageError(where + ": field '" + key + "' must be a number");
    return obj[key].get<double>();
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw UsageError(where + ": missing string field '" + key + "'");
    return obj[key].get<std::string>();
}

json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open spec file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

HalfPlanePoint parse_point(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number())
        throw UsageError(where + ": expected [x, y]");
    return {arr[0].get<double>(), arr[1].get<double>()};
}

KernelSpec parse_kernel(const json& j) {
    require_keys(j, {"variant", "s", "R"}, "kernel");
    const std::string v = need_string(j, "variant", "kernel");
    if (v == "ks") return KernelSpec::ks(need_number(j, "s", "kernel"));
    if (v == "ksr")
        return KernelSpec::ks_r(need_number(j, "s", "kernel"), need_number(j, "R", "kernel"));
    if (v == "ksinf") return KernelSpec::ks_inf(need_number(j, "s", "kernel"));
    if (v == "k0") return KernelSpec::k0();
    if (v == "k1") return KernelSpec::k1();
    throw UsageError("kernel: unknown variant '" + v + "'");
}

Curve parse_curve(const json& j) {
    const std::string kind = need_string(j, "kind", "curve");
    if (kind == "segment") {
        require_keys(j, {"kind", "z0", "z1"}, "curve");
        return Curve::segment(parse_point(j.at("z0"), "curve.z0"),
                              parse_point(j.at("z1"), "curve.z1"));
    }
    if (kind == "circle") {
        require_keys(j, {"kind", "center", "radius"}, "curve");
        return Curve::circle(parse_point(j.at("center"), "curve.center"),
                             need_number(j, "radius", "curve"));
    }
    if (kind == "cassinian") {
        require_keys(j, {"kind", "a", "b", "translate"}, "curve");
        return Curve::cassinian(need_number(j, "a", "curve"), need_number(j, "b", "curve"),
                                need_number(j, "translate", "curve"));
    }
    if (kind == "rectangle") {
        require_keys(j, {"kind", "lower_left", "upper_right"}, "curve");
        return Curve::rectangle(parse_point(j.at("lower_left"), "curve.lower_left"),
                                parse_point(j.at("upper_right"), "curve.upper_right"));
    }
    if (kind == "polyline") {
        require_keys(j, {"kind", "vertices"}, "curve");
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw UsageError("curve: polyline needs a vertices array");
        std::vector<HalfPlanePoint> verts;
        for (const auto& v : j["vertices"]) verts.push_back(parse_point(v, "curve.vertices"));
        return Curve::polyline(std::move(verts));
    }
    throw UsageError("curve: unknown kind '" + kind + "'");
}

OptimizeOptions parse_options(const json& parent) {
    OptimizeOptions opts;
    if (!parent.contains("options")) return opts;
    const json& j = parent["options"];
    require_keys(j, {"max_iterations", "grad_tol", "restarts", "jitter", "seed"}, "options");
    if (j.contains("max_iterations")) opts.max_iterations = j["max_iterations"].get<int>();
    if (j.contains("grad_tol")) opts.grad_tol = j["grad_tol"].get<double>();
    if (j.contains("restarts")) opts.restarts = j["restarts"].get<int>();
    if (j.contains("jitter")) opts.jitter = j["jitter"].get<double>();
    if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
    if (const char* env = std::getenv("RIESZ_SEED")) {
        try {
            opts.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("RIESZ_SEED must be an unsigned integer");
        }
    }
    return opts;
}

DensityModel parse_model(const json& j) {
    const std::string kind = need_string(j, "kind", "model");
    if (kind == "segment_kinf") {
        require_keys(j, {"kind", "s", "r"}, "model");
        return DensityModel::segment_kinf(need_number(j, "s", "model"),
                                          need_number(j, "r", "model"));
    }
    if (kind == "segment_hyper") {
        require_keys(j, {"kind", "s", "R", "phi"}, "model");
        return DensityModel::segment_hyper(need_number(j, "s", "model"),
                                           need_number(j, "R", "model"),
                                           need_number(j, "phi", "model"));
    }
    if (kind == "circle_hyper") {
        require_keys(j, {"kind", "s", "R"}, "model");
        return DensityModel::circle_hyper(need_number(j, "s", "model"),
                                          need_number(j, "R", "model"));
    }
    if (kind == "uniform_circle") {
        require_keys(j, {"kind"}, "model");
        return DensityModel::uniform_circle();
    }
    if (kind == "arcsine") {
        require_keys(j, {"kind", "r"}, "model");
        return DensityModel::arcsine(need_number(j, "r", "model"));
    }
    throw UsageError("model: unknown kind '" + kind + "'");
}

/// Deletes any produced files unless commit() was reached.
class OutputGuard {
public:
    std::ofstream& open(const std::string& path) {
        streams_.emplace_back(std::make_unique<std::ofstream>(path));
        if (!*streams_.back()) throw UsageError("cannot write output file " + path);
        paths_.push_back(path);
        return *streams_.back();
    }
    void commit() {
        for (auto& s : streams_) s->flush();
        committed_ = true;
    }
    ~OutputGuard() {
        streams_.clear();
        if (!committed_)
            for (const auto& p : paths_) std::remove(p.c_str());
    }

private:
    std::vector<std::unique_ptr<std::ofstream>> streams_;
    std::vector<std::string> paths_;
    bool committed_ = false;
};

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

HalfPlanePoint parse_flag_point(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(flag + ": expected 'x,y'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected 'x,y'");
    }
}

int cmd_eval(const std::string& variant, double s, double R, const std::string& ztext,
             const std::string& wtext) {
    json kj;
    kj["variant"] = variant;
    if (variant == "ks" || variant == "ksr" || variant == "ksinf") kj["s"] = s;
    if (variant == "ksr") kj["R"] = R;
    const KernelSpec spec = parse_kernel(kj);
    const HalfPlanePoint z = parse_flag_point(ztext, "--z");
    const HalfPlanePoint w = parse_flag_point(wtext, "--w");
    std::cout << fmt15(kernel_eval(spec, z, w)) << "\n";
    return 0;
}

int cmd_minimize(const std::string& spec_path) {
    const json j = load_spec(spec_path);
    require_keys(j, {"kernel", "curve", "n", "options", "output"}, "spec");
    const KernelSpec spec = parse_kernel(j.at("kernel"));
    const Curve curve = parse_curve(j.at("curve"));
    const int n = static_cast<int>(need_number(j, "n", "spec"));
    const OptimizeOptions opts = parse_options(j);
    require_keys(j.at("output"), {"points_csv", "report_json"}, "output");
    const std::string points_path = need_string(j.at("output"), "points_csv", "output");
    const std::string report_path = need_string(j.at("output"), "report_json", "output");

    const MinimizeResult res = minimize_energy(spec, curve, n, opts);

    OutputGuard guard;
    auto& csv = guard.open(points_path);
    csv << "index,t,x,y\n";
    for (int i = 0; i < res.config.size(); ++i) {
        csv << i << ',' << fmt15(res.config.params[i]) << ',' << fmt15(res.config.points[i].x)
            << ',' << fmt15(res.config.points[i].y) << "\n";
    }
    json rep;
    rep["energy"] = res.report.energy;
    rep["gradient_sup_norm"] = res.report.gradient_sup_norm;
    rep["separation"] = res.report.separation;
    rep["iterations"] = res.report.iterations;
    rep["restarts_used"] = res.report.restarts_used;
    rep["converged"] = res.report.converged;
    guard.open(report_path) << rep.dump(2) << "\n";
    guard.commit();
    return 0;
}

/// Marching-squares contour segments of Ks(., w) at the given levels.
void march_levels(const KernelSpec& spec, const HalfPlanePoint& w, double xmin, double xmax,
                  double ymin, double ymax, int nx, int ny, const std::vector<double>& levels,
                  std::ostream& csv) {
    if (nx < 2 || ny < 2) throw UsageError("levelset: grid needs nx, ny >= 2");
    std::vector<double> field(static_cast<size_t>(nx) * ny);
    auto X = [&](int i) { return xmin + (xmax - xmin) * i / (nx - 1); };
    auto Y = [&](int jj) { return ymin + (ymax - ymin) * jj / (ny - 1); };
    for (int jj = 0; jj < ny; ++jj)
        for (int i = 0; i < nx; ++i)
            field[jj * nx + i] = kernel_eval(spec, {X(i), Y(jj)}, w);

    auto interp = [](double xa, double ya, double fa, double xb, double yb, double fb,
                     double level) {
        const double t = (level - fa) / (fb - fa);
        return std::pair<double, double>{xa + t * (xb - xa), ya + t * (yb - ya)};
    };

    for (double level : levels) {
        for (int jj = 0; jj + 1 < ny; ++jj) {
            for (int i = 0; i + 1 < nx; ++i) {
                const double f00 = field[jj * nx + i], f10 = field[jj * nx + i + 1];
                const double f01 = field[(jj + 1) * nx + i], f11 = field[(jj + 1) * nx + i + 1];
                const double x0 = X(i), x1 = X(i + 1), y0 = Y(jj), y1 = Y(jj + 1);
                int mask = 0;
                if (f00 >= level) mask |= 1;
                if (f10 >= level) mask |= 2;
                if (f11 >= level) mask |= 4;
                if (f01 >= level) mask |= 8;
                if (mask == 0 || mask == 15) continue;

                // Edge crossing points: bottom, right, top, left.
                auto e0 = [&] { return interp(x0, y0, f00, x1, y0, f10, level); };
                auto e1 = [&] { return interp(x1, y0, f10, x1, y1, f11, level); };
                auto e2 = [&] { return interp(x1, y1, f11, x0, y1, f01, level); };
                auto e3 = [&] { return interp(x0, y1, f01, x0, y0, f00, level); };

                auto emit = [&](std::pair<double, double> a, std::pair<double, double> b) {
                    csv << fmt15(level) << ',' << fmt15(a.first) << ',' << fmt15(a.second) << ','
                        << fmt15(b.first) << ',' << fmt15(b.second) << "\n";
                };

                switch (mask) {
                    case 1: case 14: emit(e3(), e0()); break;
                    case 2: case 13: emit(e0(), e1()); break;
                    case 4: case 11: emit(e1(), e2()); break;
                    case 8: case 7: emit(e2(), e3()); break;
                    case 3: case 12: emit(e3(), e1()); break;
                    case 6: case 9: emit(e0(), e2()); break;
                    case 5: case 10: {
                        const double center = 0.25 * (f00 + f10 + f11 + f01);
                        const bool diag00 = (mask == 5);
                        if ((center >= level) == diag00) {
                            emit(e0(), e1());
                            emit(e2(), e3());
                        } else {
                            emit(e3(), e0());
                            emit(e1(), e2());
                        }
                        break;
                    }
                    default: break;
                }
            }
        }
    }
}

int cmd_levelset(const std::string& spec_path) {
    const json j = load_spec(spec_path);
    require_keys(j, {"s", "w", "levels", "grid", "output"}, "spec");
    const double s = need_number(j, "s", "spec");
    const HalfPlanePoint w = parse_point(j.at("w"), "spec.w");
    if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
        throw UsageError("levelset: needs a non-empty levels array");
    std::vector<double> levels;
    for (const auto& l : j["levels"]) levels.push_back(l.get<double>());
    const json& g = j.at("grid");
    require_keys(g, {"xmin", "xmax", "ymin", "ymax", "nx", "ny"}, "grid");
    require_keys(j.at("output"), {"csv"}, "output");

    OutputGuard guard;
    auto& csv = guard.open(need_string(j.at("output"), "csv", "output"));
    csv << "level,x0,y0,x1,y1\n";
    march_levels(KernelSpec::ks(s), w, need_number(g, "xmin", "grid"),
                 need_number(g, "xmax", "grid"), need_number(g, "ymin", "grid"),
                 need_number(g, "ymax", "grid"), static_cast<int>(need_number(g, "nx", "grid")),
                 static_cast<int>(need_number(g, "ny", "grid")), levels, csv);
    guard.commit();
    return 0;
}

int cmd_scaling(const std::string& spec_path) {
    const json j = load_spec(spec_path);
    require_keys(j, {"kernel", "curve", "n_list", "options", "output"}, "spec");
    const KernelSpec spec = parse_kernel(j.at("kernel"));
    const Curve curve = parse_curve(j.at("curve"));
    if (!j.contains("n_list") || !j["n_list"].is_array())
        throw UsageError("scaling: needs an n_list array");
    std::vector<int> n_list;
    for (const auto& v : j["n_list"]) n_list.push_back(v.get<int>());
    const OptimizeOptions opts = parse_options(j);
    require_keys(j.at("output"), {"csv"}, "output");

    const ScalingEstimate est = energy_scaling_estimate(spec, curve, n_list, opts);

    OutputGuard guard;
    auto& csv = guard.open(need_string(j.at("output"), "csv", "output"));
    csv << "n,energy,scaled,extrapolated,separation\n";
    for (const auto& row : est.table) {
        csv << row.n << ',' << fmt15(row.energy) << ',' << fmt15(row.scaled) << ','
            << fmt15(row.extrapolated) << ',' << fmt15(row.separation) << "\n";
    }
    guard.commit();
    std::cout << "limit " << fmt15(est.limit) << "\n";
    return 0;
}

int cmd_density(const std::string& spec_path) {
    const json j = load_spec(spec_path);
    require_keys(j, {"kernel", "curve", "n", "model", "align_rotation", "options", "output"},
                 "spec");
    const KernelSpec spec = parse_kernel(j.at("kernel"));
    const Curve curve = parse_curve(j.at("curve"));
    const int n = static_cast<int>(need_number(j, "n", "spec"));
    const DensityModel model = parse_model(j.at("model"));
    const bool align = j.contains("align_rotation") && j["align_rotation"].get<bool>();
    const OptimizeOptions opts = parse_options(j);
    require_keys(j.at("output"), {"csv"}, "output");

    const MinimizeResult res = minimize_energy(spec, curve, n, opts);
    const double dist = empirical_cdf_distance(res.config, model, align);

    OutputGuard guard;
    auto& csv = guard.open(need_string(j.at("output"), "csv", "output"));
    csv << "index,t,empirical_cdf,model_cdf\n";
    // Params are sorted; the curve parameter is monotone in the arc
    // coordinate for every supported pairing, so CDFs line up by index.
    const int nn = res.config.size();
    for (int i = 0; i < nn; ++i) {
        const double t = res.config.params[i];
        double coord;
        switch (model.kind()) {
            case DensityModel::Kind::CircleHyper:
            case DensityModel::Kind::UniformCircle: {
                double phi = 2.0 * 3.14159265358979323846 * t;
                if (phi > 3.14159265358979323846) phi -= 2.0 * 3.14159265358979323846;
                coord = phi;
                break;
            }
            case DensityModel::Kind::SegmentHyper:
                coord = 2.0 * t - 1.0;
                break;
            default:
                coord = (2.0 * t - 1.0) * model.r();
                break;
        }
        csv << i << ',' << fmt15(t) << ',' << fmt15((i + 0.5) / nn) << ','
            << fmt15(model.cdf(coord)) << "\n";
    }
    guard.commit();
    std::cout << "D " << fmt15(dist) << "\n";
    return 0;
}

int cmd_expansion(const std::string& spec_path) {
    const json j = load_spec(spec_path);
    require_keys(j, {"s", "z", "w", "R_list", "output"}, "spec");
    const double s = need_number(j, "s", "spec");
    const HalfPlanePoint z = parse_point(j.at("z"), "spec.z");
    const HalfPlanePoint w = parse_point(j.at("w"), "spec.w");
    if (!j.contains("R_list") || !j["R_list"].is_array())
        throw UsageError("expansion: needs an R_list array");
    require_keys(j.at("output"), {"csv"}, "output");

    OutputGuard guard;
    auto& csv = guard.open(need_string(j.at("output"), "csv", "output"));
    csv << "R,kernel,leading,infinity_term,drift_term,residual_2R\n";
    const KernelSpec ks = KernelSpec::ks(s);
    for (const auto& rv : j["R_list"]) {
        const double R = rv.get<double>();
        const ExpansionTerms terms = expansion_terms(s, z, w, R);
        const double full = kernel_eval(ks, {R + z.x, z.y}, {R + w.x, w.y});
        const double resid = 2.0 * R * std::fabs(full - terms.sum());
        csv << fmt15(R) << ',' << fmt15(full) << ',' << fmt15(terms.leading) << ','
            << fmt15(terms.infinity_term) << ',' << fmt15(terms.drift_term) << ','
            << fmt15(resid) << "\n";
    }
    guard.commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz-kernel reduction toolkit: kernels on the half-plane, minimal-energy "
                 "configurations, and limit-density diagnostics"};
    app.require_subcommand(1);

    std::string variant = "ks", ztext, wtext, spec_path;
    double s = 0.0, R = 0.0;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel at a point pair");
    eval->add_option("--variant", variant, "ks|ksr|ksinf|k0|k1")->required();
    eval->add_option("--s", s, "kernel exponent");
    eval->add_option("--R", R, "translate for ksr");
    eval->add_option("--z", ztext, "first point as x,y")->required();
    eval->add_option("--w", wtext, "second point as x,y")->required();

    CLI::App* minimize = app.add_subcommand("minimize", "minimize the discrete kernel energy");
    minimize->add_option("spec", spec_path, "experiment JSON file")->required();
    CLI::App* levelset = app.add_subcommand("levelset", "export kernel level-set contours");
    levelset->add_option("spec", spec_path, "experiment JSON file")->required();
    CLI::App* scaling = app.add_subcommand("scaling", "minimal-energy scaling table");
    scaling->add_option("spec", spec_path, "experiment JSON file")->required();
    CLI::App* density = app.add_subcommand("density", "compare a run against a limit density");
    density->add_option("spec", spec_path, "experiment JSON file")->required();
    CLI::App* expansion = app.add_subcommand("expansion", "large-R expansion residual table");
    expansion->add_option("spec", spec_path, "experiment JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (eval->parsed()) return cmd_eval(variant, s, R, ztext, wtext);
        if (minimize->parsed()) return cmd_minimize(spec_path);
        if (levelset->parsed()) return cmd_levelset(spec_path);
        if (scaling->parsed()) return cmd_scaling(spec_path);
        if (density->parsed()) return cmd_density(spec_path);
        if (expansion->parsed()) return cmd_expansion(spec_path);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
