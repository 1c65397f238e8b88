#include "oldroyd_cli/outputs.hpp"

#include <cstdio>
#include <fstream>

#include "oldroyd/errors.hpp"
#include "oldroyd/lp/besov.hpp"

namespace oldroyd::cli {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void header(std::ostream& out, const char* schema, const char* columns) {
    out << "# schema: oldroyd-lp." << schema << " v" << schema_version << "\n" << columns << "\n";
}

double norm_at(const lp::NormTimeSeries& series, std::size_t i, double s) {
    return lp::besov_norm(series.at(i), s, lp::Exponent::one);
}

}  // namespace

void write_timeseries(std::ostream& out, const analysis::Trajectory& traj) {
    header(out, "timeseries",
           "t,uh_B,ud_B,sigh_B,sigd_B,tau_B,Ah,Ad,B,grad_u_Linf,tau_Linf,blowup_integral");
    const double s = 0.5 * traj.dim - 1.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& a = traj.aggregates[i];
        const auto& g = traj.diagnostics[i];
        const double row[] = {traj.times[i],
                              norm_at(traj.uh, i, s),
                              norm_at(traj.ud, i, s),
                              norm_at(traj.sigh, i, s),
                              norm_at(traj.sigd, i, s),
                              norm_at(traj.tau, i, s + 1.0),
                              a.Ah,
                              a.Ad,
                              a.B,
                              g.grad_u_linf,
                              g.tau_linf,
                              g.blowup_integral};
        for (std::size_t c = 0; c < std::size(row); ++c) out << (c ? "," : "") << format_number(row[c]);
        out << "\n";
    }
}

void write_blocks(std::ostream& out, const analysis::Trajectory& traj) {
    header(out, "blocks", "t,q,i,regime,Y_q");
    for (const auto& r : traj.yq) {
        out << format_number(r.t) << "," << r.record.q << "," << r.record.component << ","
            << analysis::regime_name(r.record.regime) << "," << format_number(r.record.value) << "\n";
    }
}

void write_decay_table(std::ostream& out, const std::vector<analysis::DecayReport>& rows) {
    header(out, "linear_decay", "q,regime,paper_rate,fitted_rate,oracle_rate");
    for (const auto& r : rows) {
        out << r.q << "," << analysis::regime_name(r.regime) << "," << format_number(r.paper_rate) << ","
            << format_number(r.fitted_rate) << "," << format_number(r.oracle_rate) << "\n";
    }
}

void write_estimates(std::ostream& out, const std::vector<para::EstimateReport>& rows) {
    header(out, "estimates", "name,samples,skipped,max_ratio,max_ratio_doubled,resolution_stability");
    for (const auto& r : rows) {
        out << r.name << "," << r.samples << "," << r.skipped << "," << format_number(r.max_ratio) << ","
            << format_number(r.max_ratio_doubled) << "," << format_number(r.resolution_stability) << "\n";
    }
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows) {
    std::string columns = "omega,scale,Ah0,Ad0,B0";
    if (!rows.empty()) {
        for (const auto& c : rows.front().report.conditions) columns += "," + c.name + "_margin";
    }
    columns += ",all_pass";
    header(out, "sweep", columns.c_str());
    for (const auto& r : rows) {
        const auto& k = r.report.constants;
        out << format_number(r.omega) << "," << format_number(r.scale) << "," << format_number(k.Ah0) << ","
            << format_number(k.Ad0) << "," << format_number(k.B0);
        for (const auto& c : r.report.conditions) out << "," << format_number(c.margin);
        out << "," << (r.report.all_pass ? 1 : 0) << "\n";
    }
}

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw IoError("cannot open " + (dir / name).string() + " for writing");
    return out;
}

}  // namespace oldroyd::cli
