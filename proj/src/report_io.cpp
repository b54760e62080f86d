#include "geb/report_io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace geb {

namespace {

using nlohmann::json;

json opt_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string opt_num(const std::optional<double>& v)
{
    return v ? num(*v) : std::string();
}

}  // namespace

json report_to_json(const BoundReport& r, std::string_view graph6)
{
    json lower = json::object();
    json upper = json::object();
    json conjectural = json::object();
    json slack = json::object();
    for (auto id : kAllBounds) {
        const std::string name(bound_name(id));
        if (is_conjectural(id))
            conjectural[name] = opt_json(r.bound(id));
        else if (is_upper(id))
            upper[name] = opt_json(r.bound(id));
        else
            lower[name] = opt_json(r.bound(id));
        slack[name] = opt_json(r.slack(id));
    }

    json j;
    j["graph6"] = graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["energy"] = r.energy;
    j["spectrum"] = r.spectrum.values;
    j["lambda1"] = r.stats.lambda1;
    j["t"] = r.stats.t;
    j["t_nz"] = opt_json(r.stats.t_nz);
    j["rank"] = r.stats.rank;
    j["det"] = r.det_exact.str();
    j["singular"] = r.stats.is_singular;
    j["lower_bounds"] = std::move(lower);
    j["upper_bounds"] = std::move(upper);
    j["conjectural"] = std::move(conjectural);
    j["slack"] = std::move(slack);
    if (r.irregularity)
        j["irregularity"] = {{"epsilon", r.irregularity->epsilon}, {"beta", r.irregularity->beta}};
    else
        j["irregularity"] = nullptr;
    j["is_connected"] = r.is_connected;
    j["is_regular"] = r.is_regular;
    j["is_triangle_free"] = r.is_triangle_free;
    j["proven_bounds_hold"] = r.proven_bounds_hold;
    j["conjectures_hold"] = r.conjectures_hold;
    return j;
}

std::string csv_header()
{
    std::string h = "graph6,n,m,energy,lambda1,t,t_nz,rank,det";
    for (auto id : kAllBounds) {
        h += ',';
        h += bound_name(id);
    }
    h += ",epsilon,beta,is_connected,is_regular,is_triangle_free";
    return h;
}

std::string report_to_csv_row(const BoundReport& r, std::string_view graph6)
{
    std::ostringstream out;
    out << graph6 << ',' << r.n << ',' << r.m << ',' << num(r.energy) << ','
        << num(r.stats.lambda1) << ',' << num(r.stats.t) << ',' << opt_num(r.stats.t_nz) << ','
        << r.stats.rank << ',' << r.det_exact.str();
    for (auto id : kAllBounds)
        out << ',' << opt_num(r.bound(id));
    if (r.irregularity)
        out << ',' << num(r.irregularity->epsilon) << ',' << num(r.irregularity->beta);
    else
        out << ",,";
    out << ',' << r.is_connected << ',' << r.is_regular << ',' << r.is_triangle_free;
    return out.str();
}

void write_report_table(std::ostream& out, const BoundReport& r, std::string_view graph6)
{
    auto row = [&out](std::string_view label, const std::string& value) {
        out << "  " << std::left << std::setw(18) << label << value << '\n';
    };
    out << "graph " << graph6 << "  (n=" << r.n << ", m=" << r.m << ")\n";
    row("energy", short_num(r.energy));
    row("lambda1", short_num(r.stats.lambda1));
    row("t", short_num(r.stats.t));
    row("t_nz", r.stats.t_nz ? short_num(*r.stats.t_nz) : "-");
    row("rank", std::to_string(r.stats.rank));
    row("det", r.det_exact.str());
    out << "\n  " << std::left << std::setw(18) << "bound" << std::setw(24) << "value"
        << "slack\n";
    for (auto id : kAllBounds) {
        const auto b = r.bound(id);
        std::string name(bound_name(id));
        if (is_conjectural(id))
            name += " (conj)";
        out << "  " << std::setw(18) << name << std::setw(24) << (b ? short_num(*b) : "-")
            << (b ? short_num(*r.slack(id)) : "-") << '\n';
    }
    if (r.irregularity) {
        out << '\n';
        row("epsilon", short_num(r.irregularity->epsilon));
        row("beta", short_num(r.irregularity->beta));
    }
    out << '\n';
    row("connected", r.is_connected ? "yes" : "no");
    row("regular", r.is_regular ? "yes" : "no");
    row("triangle-free", r.is_triangle_free ? "yes" : "no");
}

json summary_to_json(const CorpusSummary& s)
{
    json j;
    j["graphs_seen"] = s.graphs_seen;
    j["graphs_checked"] = s.graphs_checked;
    j["graphs_skipped"] = s.graphs_skipped;
    json v = json::array();
    for (const auto& x : s.violations)
        v.push_back({{"graph6", x.graph6},
                     {"check", x.check},
                     {"bound_value", x.bound_value},
                     {"energy", x.energy},
                     {"spectrum", x.spectrum}});
    j["violations"] = std::move(v);
    json h = json::array();
    for (const auto& x : s.equality_hits)
        h.push_back({{"graph6", x.graph6},
                     {"bound", x.bound},
                     {"slack", x.slack},
                     {"complete_bipartite", x.complete_bipartite}});
    j["equality_hits"] = std::move(h);
    json e = json::object();
    for (const auto& [name, x] : s.extremes)
        e[name] = {{"graph6", x.graph6}, {"slack", x.slack}};
    j["extremes"] = std::move(e);
    json d = json::array();
    for (const auto& x : s.decode_failures)
        d.push_back({{"line", x.line}, {"message", x.message}});
    j["decode_failures"] = std::move(d);
    return j;
}

}  // namespace geb
