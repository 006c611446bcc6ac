#include "qgsw/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ios>
#include <sstream>

#include <json.hpp>

namespace qgsw {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json settings_to_json(const SweepSettings& s) {
    return json{{"n", s.n},
                {"length", s.length},
                {"lambdas", s.lambdas},
                {"T", s.T},
                {"samples", s.samples},
                {"solver",
                 {{"cfl", s.solver.cfl},
                  {"fixed_dt", s.solver.fixed_dt},
                  {"filter", s.solver.filter},
                  {"filter_alpha", s.solver.filter_alpha},
                  {"filter_order", s.solver.filter_order}}},
                {"theta", {{"C", s.theta.C}, {"alpha", s.theta.alpha}}},
                {"norms", s.norms},
                {"threads", s.threads}};
}

SweepSettings settings_from_json(const json& j) {
    SweepSettings s;
    s.n = j.at("n").get<std::size_t>();
    s.length = j.at("length").get<double>();
    s.lambdas = j.at("lambdas").get<std::vector<double>>();
    s.T = j.at("T").get<double>();
    s.samples = j.at("samples").get<std::size_t>();
    const auto& sol = j.at("solver");
    s.solver.cfl = sol.at("cfl").get<double>();
    s.solver.fixed_dt = sol.at("fixed_dt").get<double>();
    s.solver.filter = sol.at("filter").get<bool>();
    s.solver.filter_alpha = sol.at("filter_alpha").get<double>();
    s.solver.filter_order = sol.at("filter_order").get<double>();
    s.theta.C = j.at("theta").at("C").get<double>();
    s.theta.alpha = j.at("theta").at("alpha").get<double>();
    s.norms = j.at("norms").get<std::vector<std::string>>();
    s.threads = j.at("threads").get<std::size_t>();
    return s;
}

json row_to_json(const SampleRow& r) {
    return json{{"t", r.t},       {"l1", r.l1},         {"l2", r.l2},
                {"l4", r.l4},     {"linf", r.linf},     {"u_l2", r.u_l2},
                {"u_linf", r.u_linf}, {"xnorm", r.xnorm},
                {"hipass_l2", r.hipass_l2}, {"annulus_l2", r.annulus_l2}};
}

SampleRow row_from_json(const json& j) {
    SampleRow r;
    r.t = j.at("t").get<double>();
    r.l1 = j.at("l1").get<double>();
    r.l2 = j.at("l2").get<double>();
    r.l4 = j.at("l4").get<double>();
    r.linf = j.at("linf").get<double>();
    r.u_l2 = j.at("u_l2").get<double>();
    r.u_linf = j.at("u_linf").get<double>();
    r.xnorm = j.at("xnorm").get<double>();
    r.hipass_l2 = j.at("hipass_l2").get<double>();
    r.annulus_l2 = j.at("annulus_l2").get<double>();
    return r;
}

}  // namespace

std::string sweep_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "case_index,lambda,t,l1,l2,l4,linf,u_l2,u_linf,xnorm,hipass_l2,annulus_l2\n";
    for (std::size_t c = 0; c < report.cases.size(); ++c) {
        const auto& cs = report.cases[c];
        for (const auto& r : cs.series) {
            out << c << ',' << fmt(cs.lambda) << ',' << fmt(r.t) << ',' << fmt(r.l1) << ','
                << fmt(r.l2) << ',' << fmt(r.l4) << ',' << fmt(r.linf) << ',' << fmt(r.u_l2)
                << ',' << fmt(r.u_linf) << ',' << fmt(r.xnorm) << ',' << fmt(r.hipass_l2) << ','
                << fmt(r.annulus_l2) << '\n';
        }
    }
    return out.str();
}

std::string sweep_json(const SweepReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        json series = json::array();
        for (const auto& r : c.series) series.push_back(row_to_json(r));
        cases.push_back({{"lambda", c.lambda},
                         {"theta", c.theta},
                         {"gap0", c.gap0},
                         {"series", series}});
    }
    json euler = json::array();
    for (const auto& d : report.euler_reference) {
        euler.push_back({{"t", d.t},
                         {"mean", d.mean},
                         {"l1", d.l1},
                         {"l2", d.l2},
                         {"l4", d.l4},
                         {"linf", d.linf},
                         {"hamiltonian", d.hamiltonian}});
    }
    json fits = json::array();
    for (const auto& f : report.fits) {
        fits.push_back({{"norm", f.norm},
                        {"slope", f.slope},
                        {"intercept", f.intercept},
                        {"residual", f.residual},
                        {"lambda_min", f.lambda_min},
                        {"lambda_max", f.lambda_max}});
    }
    json j{{"config", settings_to_json(report.settings)},
           {"euler_reference", euler},
           {"cases", cases},
           {"fits", fits},
           {"scaling_constant", report.scaling_constant},
           {"scaling_consistent", report.scaling_consistent}};
    return j.dump(2);
}

SweepReport parse_sweep_json(const std::string& text) {
    const json j = json::parse(text);
    SweepReport report;
    report.settings = settings_from_json(j.at("config"));
    for (const auto& e : j.at("euler_reference")) {
        Diagnostics d;
        d.t = e.at("t").get<double>();
        d.mean = e.at("mean").get<double>();
        d.l1 = e.at("l1").get<double>();
        d.l2 = e.at("l2").get<double>();
        d.l4 = e.at("l4").get<double>();
        d.linf = e.at("linf").get<double>();
        d.hamiltonian = e.at("hamiltonian").get<double>();
        report.euler_reference.push_back(d);
    }
    for (const auto& c : j.at("cases")) {
        CaseResult cr;
        cr.lambda = c.at("lambda").get<double>();
        cr.theta = c.at("theta").get<double>();
        cr.gap0 = c.at("gap0").get<double>();
        for (const auto& r : c.at("series")) cr.series.push_back(row_from_json(r));
        report.cases.push_back(std::move(cr));
    }
    for (const auto& f : j.at("fits")) {
        RateFit fit;
        fit.norm = f.at("norm").get<std::string>();
        fit.slope = f.at("slope").get<double>();
        fit.intercept = f.at("intercept").get<double>();
        fit.residual = f.at("residual").get<double>();
        fit.lambda_min = f.at("lambda_min").get<double>();
        fit.lambda_max = f.at("lambda_max").get<double>();
        report.fits.push_back(std::move(fit));
    }
    report.scaling_constant = j.at("scaling_constant").get<double>();
    report.scaling_consistent = j.at("scaling_consistent").get<bool>();
    return report;
}

std::string sweep_svg(const SweepReport& report, const RateFit& fit) {
    // log-log scatter of sup-in-time error vs lambda plus the fitted line
    const double W = 640, H = 480, M = 60;
    std::vector<std::pair<double, double>> pts;
    double SampleRow::*member = nullptr;
    const std::vector<std::pair<std::string, double SampleRow::*>> fields = {
        {"l1", &SampleRow::l1},       {"l2", &SampleRow::l2},
        {"l4", &SampleRow::l4},       {"linf", &SampleRow::linf},
        {"u_l2", &SampleRow::u_l2},   {"u_linf", &SampleRow::u_linf},
        {"xnorm", &SampleRow::xnorm}, {"hipass_l2", &SampleRow::hipass_l2},
        {"annulus_l2", &SampleRow::annulus_l2}};
    for (const auto& [name, m] : fields) {
        if (name == fit.norm) member = m;
    }
    if (member == nullptr) return {};
    for (const auto& c : report.cases) pts.emplace_back(std::log10(c.lambda),
                                                        std::log10(c.sup(member)));
    double xmin = pts[0].first, xmax = pts[0].first, ymin = pts[0].second, ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const double pad = 0.2;
    xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
    auto X = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
    auto Y = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<line x1='" << M << "' y1='" << H - M << "' x2='" << W - M << "' y2='" << H - M
        << "' stroke='black'/>\n";
    out << "<line x1='" << M << "' y1='" << M << "' x2='" << M << "' y2='" << H - M
        << "' stroke='black'/>\n";
    out << "<text x='" << W / 2 << "' y='" << H - 15
        << "' text-anchor='middle' font-size='14'>log10 lambda</text>\n";
    out << "<text x='" << W / 2 << "' y='25' text-anchor='middle' font-size='14'>" << fit.norm
        << " sup-in-time error, slope " << fmt(fit.slope) << "</text>\n";
    const double ln10 = std::log(10.0);
    auto fitted = [&](double x10) {
        return (fit.intercept + fit.slope * (x10 * ln10)) / ln10;
    };
    out << "<line x1='" << X(xmin + pad) << "' y1='" << Y(fitted(xmin + pad)) << "' x2='"
        << X(xmax - pad) << "' y2='" << Y(fitted(xmax - pad))
        << "' stroke='steelblue' stroke-width='1.5'/>\n";
    for (const auto& [x, y] : pts) {
        out << "<circle cx='" << X(x) << "' cy='" << Y(y) << "' r='4' fill='crimson'/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<std::string> emit_report(const SweepReport& report, const std::string& dir,
                                     const std::vector<std::string>& formats) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::ios_base::failure("emit_report: cannot create directory " + dir);
    std::vector<std::string> written;
    auto contains = [&](const char* f) {
        return std::find(formats.begin(), formats.end(), f) != formats.end();
    };
    auto write = [&](const std::string& name, const std::string& body) {
        const std::string path = (fs::path(dir) / name).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::ios_base::failure("emit_report: cannot write " + path);
        out << body;
        written.push_back(path);
    };
    if (contains("csv")) write("sweep.csv", sweep_csv(report));
    if (contains("json")) write("sweep.json", sweep_json(report));
    if (contains("svg")) {
        for (const auto& fit : report.fits) {
            write("rate_" + fit.norm + ".svg", sweep_svg(report, fit));
        }
    }
    return written;
}

std::string patch_study_csv(const PatchStudyReport& report) {
    std::ostringstream out;
    out << "t,sup_difference,symmetric_difference_area,intersection_area\n";
    for (const auto& r : report.series) {
        out << fmt(r.t) << ',' << fmt(r.sup_difference) << ','
            << fmt(r.symmetric_difference_area) << ',' << fmt(r.intersection_area) << '\n';
    }
    return out.str();
}

std::string patch_study_json(const PatchStudyReport& report) {
    json series = json::array();
    for (const auto& r : report.series) {
        series.push_back({{"t", r.t},
                          {"sup_difference", r.sup_difference},
                          {"symmetric_difference_area", r.symmetric_difference_area},
                          {"intersection_area", r.intersection_area}});
    }
    json j{{"series", series},
           {"diverged", report.diverged},
           {"window_start", report.window_start},
           {"window_length", report.window_length}};
    return j.dump(2);
}

}  // namespace qgsw
