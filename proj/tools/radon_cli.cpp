// Experiment CLI: projections, backprojections, phantom rasterization,
// convergence sweeps, and the self-check suite.
//
// Exit codes: 0 ok, 1 invariant failure, 2 usage, 3 I/O.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "radon/io.hpp"
#include "radon/metrics.hpp"
#include "radon/operators.hpp"
#include "radon/parallel.hpp"
#include "radon/phantoms.hpp"
#include "radon/verify.hpp"

namespace {

using namespace radon;

constexpr double kPi = std::numbers::pi;

WeightKind parse_method(const std::string& m)
{
    if (m == "ray") return WeightKind::RayDriven;
    if (m == "pixel") return WeightKind::PixelDriven;
    throw CLI::ValidationError("--method must be ray or pixel");
}

AngleSetKind angle_set_from(int n_phi, const std::string& angles_deg)
{
    if (!angles_deg.empty()) {
        std::vector<double> angles;
        std::stringstream ss(angles_deg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            angles.push_back(std::stod(tok) * kPi / 180.0);
        return ExplicitAngles{std::move(angles)};
    }
    return FullEquispaced{n_phi};
}

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct SweepRow {
    int n_x, n_s, n_phi;
    std::string method;
    double global_rel_l2;
    double worst_angle_rel_l2;
    double worst_angle_deg;
    double wall_time_s;
};

void write_csv(const std::string& path, const std::vector<SweepRow>& rows, bool timing)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out << "n_x,n_s,n_phi,method,global_rel_l2,worst_angle_rel_l2,worst_angle_deg,"
           "wall_time_s\n";
    out.precision(12);
    for (const SweepRow& r : rows) {
        out << r.n_x << ',' << r.n_s << ',' << r.n_phi << ',' << r.method << ','
            << r.global_rel_l2 << ',' << r.worst_angle_rel_l2 << ',' << r.worst_angle_deg
            << ',' << (timing ? r.wall_time_s : 0.0) << '\n';
    }
}

void guard_cost(double cost, double cap)
{
    if (cost > cap) {
        std::ostringstream msg;
        msg << "estimated cost " << cost << " weight evaluations exceeds cap " << cap
            << " (raise --max-cost to override)";
        throw std::runtime_error(msg.str());
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Ray-driven / pixel-driven Radon transform experiments"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = hardware)");

    // ---- project ----
    auto* project = app.add_subcommand("project", "forward-project a phantom");
    std::string pr_phantom = "ellipse-suite", pr_out, pr_method = "ray", pr_angles_deg;
    int pr_nx = 256, pr_ns = 256, pr_nphi = 90, pr_mean = 1;
    double pr_fov = 1.0;
    bool pr_verbose = false;
    project->add_option("--phantom", pr_phantom, "ellipse-suite | disk:<r>:<d> | file");
    project->add_option("--nx", pr_nx)->check(CLI::PositiveNumber);
    project->add_option("--ns", pr_ns)->check(CLI::PositiveNumber);
    project->add_option("--nphi", pr_nphi)->check(CLI::PositiveNumber);
    project->add_option("--angles-deg", pr_angles_deg, "explicit angle list in degrees");
    project->add_option("--method", pr_method, "ray | pixel");
    project->add_option("--mean-sample", pr_mean, "k x k mean-value rasterization");
    project->add_option("--fov", pr_fov, "physical field-of-view width (output scaling)");
    project->add_option("--out", pr_out, "output RDK sinogram")->required();
    project->add_flag("--verbose", pr_verbose, "print per-angle mass");

    // ---- backproject ----
    auto* backproject = app.add_subcommand("backproject", "backproject a sinogram file");
    std::string bp_sino, bp_out, bp_method = "ray", bp_angles_deg;
    int bp_nx = 256;
    double bp_fov = 1.0;
    backproject->add_option("--sino", bp_sino, "input RDK sinogram")->required();
    backproject->add_option("--nx", bp_nx)->check(CLI::PositiveNumber);
    backproject->add_option("--method", bp_method, "ray | pixel");
    backproject->add_option("--angles-deg", bp_angles_deg,
                            "angle list; default equispaced over [0,180)");
    backproject->add_option("--fov", bp_fov);
    backproject->add_option("--out", bp_out, "output RDK image")->required();

    // ---- phantom ----
    auto* phantom_cmd = app.add_subcommand("phantom", "rasterize a phantom to an image");
    std::string ph_phantom = "ellipse-suite", ph_out;
    int ph_nx = 256, ph_mean = 1;
    phantom_cmd->add_option("--phantom", ph_phantom);
    phantom_cmd->add_option("--nx", ph_nx)->check(CLI::PositiveNumber);
    phantom_cmd->add_option("--mean-sample", ph_mean);
    phantom_cmd->add_option("--out", ph_out)->required();

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "convergence sweep; writes a CSV");
    std::string sw_kind = "forward", sw_methods = "ray,pixel", sw_phantom = "ellipse-suite";
    std::string sw_csv;
    std::vector<int> sw_res, sw_nphi_list;
    int sw_nphi = 90;
    double sw_mask = 0.95, sw_ns_factor = 1.0, sw_max_cost = 5e11;
    bool sw_no_timing = false;
    sweep->add_option("--kind", sw_kind, "forward | backproj-const | backproj-angles");
    sweep->add_option("--resolutions", sw_res, "ascending n_x list")->required();
    sweep->add_option("--nphi", sw_nphi);
    sweep->add_option("--nphi-list", sw_nphi_list, "angle counts for backproj-angles");
    sweep->add_option("--methods", sw_methods, "comma list of ray,pixel");
    sweep->add_option("--phantom", sw_phantom);
    sweep->add_option("--mask-radius", sw_mask);
    sweep->add_option("--ns-factor", sw_ns_factor, "n_s = factor * n_x");
    sweep->add_option("--max-cost", sw_max_cost, "abort above this many weight evals");
    sweep->add_flag("--no-timing", sw_no_timing, "zero the wall-time column");
    sweep->add_option("--csv", sw_csv, "output CSV path")->required();

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant self-checks");
    std::string vf_level = "quick";
    verify_cmd->add_option("--level", vf_level, "quick | full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    set_max_threads(threads);

    if (project->parsed()) {
        const auto phantom = io::resolve_phantom(pr_phantom);
        const auto par = make_params(pr_nx, pr_ns, angle_set_from(pr_nphi, pr_angles_deg));
        const ImageGrid img_grid{par};
        const SinogramGrid sino_grid{par};
        const Image f = rasterize(phantom, img_grid,
                                  pr_mean > 1 ? RasterMode::MeanValue : RasterMode::PointSample,
                                  pr_mean);
        Sinogram g = forward_project(f, sino_grid, parse_method(pr_method));
        if (pr_fov != 1.0)
            for (double& v : g.values) v *= pr_fov / 2.0;
        if (pr_verbose) {
            const double ds = sino_grid.delta_s();
            for (int q = 0; q < sino_grid.n_phi(); ++q) {
                double mass = 0.0;
                for (int p = 0; p < sino_grid.n_s(); ++p) mass += g.at(q, p);
                std::cout << "angle " << sino_grid.angle(q) * 180.0 / kPi << " deg  mass "
                          << ds * mass << '\n';
            }
        }
        io::write_sinogram(pr_out, g);
        return 0;
    }

    if (backproject->parsed()) {
        const auto arr = io::read_rdk(bp_sino);
        if (arr.kind != "sinogram")
            throw std::runtime_error(bp_sino + ": expected a sinogram file");
        const auto par = make_params(bp_nx, arr.cols, angle_set_from(arr.rows, bp_angles_deg));
        if (par.n_phi() != arr.rows)
            throw std::runtime_error("--angles-deg count does not match sinogram rows");
        Sinogram g{SinogramGrid{par}, arr.values};
        Image f = back_project(g, ImageGrid{par}, parse_method(bp_method));
        if (bp_fov != 1.0)
            for (double& v : f.values) v *= bp_fov / 2.0;
        io::write_image(bp_out, f);
        return 0;
    }

    if (phantom_cmd->parsed()) {
        const auto phantom = io::resolve_phantom(ph_phantom);
        const auto par = make_params(ph_nx, ph_nx, FullEquispaced{1});
        const Image f = rasterize(phantom, ImageGrid{par},
                                  ph_mean > 1 ? RasterMode::MeanValue : RasterMode::PointSample,
                                  ph_mean);
        io::write_image(ph_out, f);
        return 0;
    }

    if (sweep->parsed()) {
        std::vector<WeightKind> kinds;
        std::vector<std::string> kind_names;
        {
            std::stringstream ss(sw_methods);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                kinds.push_back(parse_method(tok));
                kind_names.push_back(tok);
            }
        }
        std::vector<SweepRow> rows;

        if (sw_kind == "forward") {
            const auto phantom = io::resolve_phantom(sw_phantom);
            for (int n : sw_res)
                guard_cost(static_cast<double>(sw_nphi) * n * n * kinds.size(), sw_max_cost);
            for (int n : sw_res) {
                const auto par = make_params(n, n, FullEquispaced{sw_nphi});
                const ImageGrid img_grid{par};
                const SinogramGrid sino_grid{par};
                const Image f = rasterize(phantom, img_grid);
                const Sinogram truth = analytic_sinogram(phantom, sino_grid);
                for (size_t m = 0; m < kinds.size(); ++m) {
                    const double t0 = now_seconds();
                    const Sinogram g = forward_project(f, sino_grid, kinds[m]);
                    const double t1 = now_seconds();
                    const ErrorReport rep = error_report(truth, g);
                    rows.push_back({n, n, sw_nphi, kind_names[m], rep.global_rel_l2,
                                    rep.worst_angle_rel_l2,
                                    sino_grid.angle(rep.worst_angle_index) * 180.0 / kPi,
                                    t1 - t0});
                }
            }
        } else if (sw_kind == "backproj-const" || sw_kind == "backproj-angles") {
            std::vector<std::pair<int, int>> cases; // (n_x, n_phi)
            if (sw_kind == "backproj-const") {
                for (int n : sw_res) cases.emplace_back(n, sw_nphi);
            } else {
                if (sw_nphi_list.empty())
                    throw CLI::ValidationError("backproj-angles requires --nphi-list");
                for (int nphi : sw_nphi_list) cases.emplace_back(sw_res.front(), nphi);
            }
            for (auto [n, nphi] : cases)
                guard_cost(static_cast<double>(n) * n * nphi * kinds.size(), sw_max_cost);
            for (auto [n, nphi] : cases) {
                const int n_s = std::max(1, static_cast<int>(std::lround(sw_ns_factor * n)));
                const auto par = make_params(n, n_s, FullEquispaced{nphi});
                const ImageGrid img_grid{par};
                const SinogramGrid sino_grid{par};
                const Sinogram g = constant_sinogram(sino_grid, 1.0);
                Image truth{img_grid};
                std::fill(truth.values.begin(), truth.values.end(), kPi);
                for (size_t m = 0; m < kinds.size(); ++m) {
                    const double t0 = now_seconds();
                    const Image bp = back_project(g, img_grid, kinds[m]);
                    const double t1 = now_seconds();
                    const ErrorReport rep = error_report(truth, bp, sw_mask);
                    rows.push_back({n, n_s, nphi, kind_names[m], rep.global_rel_l2, 0.0, 0.0,
                                    t1 - t0});
                }
            }
        } else {
            throw CLI::ValidationError("unknown sweep kind: " + sw_kind);
        }
        write_csv(sw_csv, rows, !sw_no_timing);
        return 0;
    }

    // verify
    const auto level = vf_level == "full" ? verify::Level::Full : verify::Level::Quick;
    const auto results = verify::run(level);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
                  << ")\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
