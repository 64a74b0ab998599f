// Command-line front end: series evaluation, rational-point classification,
// tangent probing, continued fractions, dimension estimation, and figure
// export (SVG/CSV).
//
// Exit codes: 0 ok, 2 usage, 3 I/O, 4 inconclusive, 5 numeric failure.

#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rndf/continued_fractions.hpp"
#include "rndf/errors.hpp"
#include "rndf/geometry_metrics.hpp"
#include "rndf/rational_points.hpp"
#include "rndf/series.hpp"
#include "rndf/support.hpp"
#include "rndf/tangent_probe.hpp"

using nlohmann::json;
using namespace rndf;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_inconclusive = 4;
constexpr int exit_numeric = 5;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool parse_fraction(const std::string& s, std::int64_t& p, std::int64_t& q) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return false;
    try {
        std::size_t used = 0;
        p = std::stoll(s.substr(0, slash), &used);
        if (used != slash) return false;
        q = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) return false;
    } catch (...) {
        return false;
    }
    return q > 0;
}

bool is_named_constant(const std::string& s) {
    return s == "pi-3" || s == "sqrt2-1" || s == "golden-1";
}

// Accepts "p/q", a named constant, or a decimal literal (x convention).
time_point parse_point_x(const std::string& s) {
    std::int64_t p = 0, q = 1;
    if (parse_fraction(s, p, q)) return time_point::rational(p, q);
    if (is_named_constant(s)) return time_point::named(s);
    return time_point::decimal(s);
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void write_atomically(const std::string& path, const std::string& payload) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot open " + tmp);
        out << payload;
        if (!out) throw std::ios_base::failure("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::ios_base::failure("rename failed for " + path);
}

std::string render_csv(const polyline& poly) {
    std::string out = "param,re,im\n";
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        out += format_sig(poly.params[i], 17);
        out += ',';
        out += format_sig(poly.points[i].real(), 17);
        out += ',';
        out += format_sig(poly.points[i].imag(), 17);
        out += '\n';
    }
    return out;
}

// Single-path SVG with the viewBox fitted to the data extents plus a 5%
// margin; numbers carry 9 significant digits. The y axis is flipped so the
// image matches the mathematical orientation.
std::string render_svg(const polyline& poly) {
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (complex z : poly.points) {
        min_x = std::min(min_x, z.real());
        max_x = std::max(max_x, z.real());
        min_y = std::min(min_y, -z.imag());
        max_y = std::max(max_y, -z.imag());
    }
    double w = max_x - min_x, h = max_y - min_y;
    double mx = 0.05 * w, my = 0.05 * h;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += format_sig(min_x - mx, 9) + " " + format_sig(min_y - my, 9) + " " +
           format_sig(w + 2 * mx, 9) + " " + format_sig(h + 2 * my, 9) + "\">\n";
    out += "<path fill=\"none\" stroke=\"black\" stroke-width=\"" +
           format_sig(std::max(w, h) / 500.0, 9) + "\" d=\"";
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        out += i == 0 ? "M" : "L";
        out += format_sig(poly.points[i].real(), 9);
        out += " ";
        out += format_sig(-poly.points[i].imag(), 9);
    }
    out += "\"/>\n</svg>\n";
    return out;
}

json convergent_json(const convergent& cv) {
    json j;
    j["p"] = cv.p.str();
    j["q"] = cv.q.str();
    j["K"] = cv.K;
    j["side"] = cv.side == approach_side::left ? "left" : "right";
    j["q_odd"] = cv.q_odd;
    if (cv.exact) j["exact"] = true;
    return j;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int run(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the complex Riemann non-differentiable function"};
    app.require_subcommand(1);
    eval_config cfg;

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate phi at a parameter value");
    std::string eval_t, eval_x;
    double eval_tol = 1e-8;
    eval->add_option("--t", eval_t, "curve parameter t");
    eval->add_option("--x", eval_x, "rescaled parameter x = 2 pi t (rational p/q, decimal, or "
                                    "named constant)");
    eval->add_option("--tol", eval_tol, "absolute error bound");

    // plot
    auto* plot = app.add_subcommand("plot", "sample phi and write SVG or CSV");
    double from_t = 0.0, to_t = 1.0 / (2.0 * M_PI);
    std::size_t plot_n = 20001;
    std::string plot_out = "curve.svg", plot_format = "svg";
    double plot_tol = 1e-8;
    plot->add_option("--from", from_t, "start parameter (t units)");
    plot->add_option("--to", to_t, "end parameter (t units)");
    plot->add_option("--n", plot_n, "number of samples");
    plot->add_option("--out", plot_out, "output path")->required();
    plot->add_option("--format", plot_format, "svg or csv")
        ->check(CLI::IsMember({"svg", "csv"}));
    plot->add_option("--tol", plot_tol, "absolute error bound per sample");

    // classify
    auto* cls = app.add_subcommand("classify", "classify a rational point p/q");
    std::string cls_frac;
    cls->add_option("fraction", cls_frac, "rational x as p/q")->required();

    // probe
    auto* probe = app.add_subcommand("probe", "no-tangent certificate at a point");
    std::string probe_rational, probe_named, probe_x;
    double probe_start = 0.0, probe_ratio = 0.0;
    int probe_count = 0;
    std::string probe_side = "right";
    double probe_tol = 1e-8;
    probe->add_option("--rational", probe_rational, "rational x as p/q");
    probe->add_option("--named", probe_named, "named constant (pi-3, sqrt2-1, golden-1)");
    probe->add_option("--x", probe_x, "decimal x literal");
    probe->add_option("--start", probe_start, "extra probe schedule: first offset");
    probe->add_option("--ratio", probe_ratio, "extra probe schedule: geometric ratio");
    probe->add_option("--count", probe_count, "extra probe schedule: offsets");
    probe->add_option("--side", probe_side, "extra probe schedule side")
        ->check(CLI::IsMember({"left", "right"}));
    probe->add_option("--tol", probe_tol, "base tolerance");

    // cf
    auto* cf = app.add_subcommand("cf", "continued fraction expansion and convergents");
    std::string cf_const;
    int cf_n = 8;
    cf->add_option("constant", cf_const, "p/q, decimal literal, or named constant")->required();
    cf->add_option("--n", cf_n, "number of partial quotients");

    // dim
    auto* dim = app.add_subcommand("dim", "box-counting dimension of the period image");
    std::size_t dim_n = (std::size_t{1} << 23) + 1;
    double eps_lo = 4e-4, eps_hi = 2e-2;
    int levels = 14;
    double dim_tol = 1e-8;
    dim->add_option("--n", dim_n, "number of curve samples");
    dim->add_option("--eps-lo", eps_lo, "smallest box size");
    dim->add_option("--eps-hi", eps_hi, "largest box size");
    dim->add_option("--levels", levels, "ladder levels");
    dim->add_option("--tol", dim_tol, "sampling tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (eval->parsed()) {
        if (eval_t.empty() == eval_x.empty())
            throw usage_error("eval: exactly one of --t/--x is required");
        cfg.tol = eval_tol;
        cfg.validate();
        time_point tp = eval_t.empty() ? parse_point_x(eval_x)
                                       : time_point::from_t(std::stod(eval_t));
        complex v = eval_phi(tp, cfg);
        json j;
        j["re"] = v.real();
        j["im"] = v.imag();
        j["err_bound"] = cfg.tol;
        emit(j);
        return exit_ok;
    }

    if (plot->parsed()) {
        cfg.tol = plot_tol;
        polyline poly = sample_curve(from_t, to_t, plot_n, cfg);
        write_atomically(plot_out, plot_format == "csv" ? render_csv(poly) : render_svg(poly));
        json j;
        j["verdict"] = "ok";
        j["samples"] = poly.points.size();
        j["out"] = plot_out;
        emit(j);
        return exit_ok;
    }

    if (cls->parsed()) {
        std::int64_t p = 0, q = 1;
        if (!parse_fraction(cls_frac, p, q)) throw usage_error("classify: expected p/q");
        rational_point pt = classify(p, q);
        json j;
        j["verdict"] = "ok";
        j["klass"] = pt.klass == point_class::spiral ? "spiral" : "corner";
        j["q_tilde"] = pt.q_tilde;
        j["p"] = pt.p;
        j["q"] = pt.q;
        j["validity_radius"] = pt.validity_radius();
        emit(j);
        return exit_ok;
    }

    if (probe->parsed()) {
        int given = (!probe_rational.empty()) + (!probe_named.empty()) + (!probe_x.empty());
        if (given != 1) throw usage_error("probe: give exactly one of --rational/--named/--x");
        cfg.tol = probe_tol;
        time_point tp = !probe_rational.empty() ? parse_point_x(probe_rational)
                        : !probe_named.empty()  ? time_point::named(probe_named)
                                                : time_point::decimal(probe_x);
        certificate cert = no_tangent_certificate(tp, cfg);
        json j;
        j["verdict"] = to_string(cert.verdict);
        switch (cert.verdict) {
            case verdict_kind::corner_mismatch:
                j["angle_diff"] = cert.angle_diff;
                j["right_dir"] = {cert.right_dir.real(), cert.right_dir.imag()};
                j["left_dir"] = {cert.left_dir.real(), cert.left_dir.imag()};
                j["dispersion_right"] = cert.dispersion_right;
                j["dispersion_left"] = cert.dispersion_left;
                j["e_fit"] = {cert.e_fit.real(), cert.e_fit.imag()};
                break;
            case verdict_kind::spiral_sweep:
                j["max_gap_right"] = cert.max_gap_right;
                j["max_gap_left"] = cert.max_gap_left;
                break;
            case verdict_kind::irrational_arc:
                j["arc_width"] = cert.arc_width;
                j["n_directions"] = cert.n_directions;
                j["q_used"] = cert.q_used;
                j["K_used"] = cert.K_used;
                j["window_m"] = cert.window_m;
                j["regime"] = cert.regime;
                break;
        }
        if (probe_count > 0 && probe_start > 0.0 && probe_ratio > 0.0 && probe_ratio < 1.0) {
            offset_schedule sched{probe_start, probe_ratio, probe_count,
                                  probe_side == "left" ? approach_side::left
                                                       : approach_side::right};
            probe_report rep = probe_limit(tp, sched, cfg);
            json r;
            r["dispersion"] = rep.dispersion;
            r["max_gap"] = rep.max_gap;
            r["skipped"] = rep.skipped;
            if (rep.limit_candidate)
                r["limit_candidate"] = {rep.limit_candidate->real(), rep.limit_candidate->imag()};
            j["schedule_report"] = r;
        }
        emit(j);
        return exit_ok;
    }

    if (cf->parsed()) {
        time_point tp = parse_point_x(cf_const);
        cf_expansion e = cf_expand(tp, cf_n);
        auto cvs = convergents(e, tp);
        json j;
        j["verdict"] = "ok";
        j["a0"] = e.a0;
        j["partial_quotients"] = e.partial_quotients;
        j["terminated"] = e.terminated;
        json list = json::array();
        for (const auto& cv : cvs) list.push_back(convergent_json(cv));
        j["convergents"] = list;
        emit(j);
        return exit_ok;
    }

    if (dim->parsed()) {
        cfg.tol = dim_tol;
        polyline poly = sample_curve(0.0, 1.0 / (2.0 * M_PI), dim_n, cfg);
        dimension_fit fit = dimension_estimate(poly, eps_lo, eps_hi, levels);
        json j;
        j["verdict"] = "ok";
        j["slope"] = fit.slope;
        j["stderr"] = fit.std_error;
        j["eps_ladder"] = fit.eps_ladder;
        j["counts"] = fit.counts;
        emit(j);
        return exit_ok;
    }

    throw usage_error("no subcommand");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const inconclusive_error& e) {
        json j;
        j["verdict"] = "inconclusive";
        j["reason"] = e.what();
        emit(j);
        return exit_inconclusive;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return exit_io;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return exit_numeric;
    }
}
