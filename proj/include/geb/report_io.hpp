#pragma once

#include "geb/bounds.hpp"
#include "geb/harness.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>

namespace geb {

// One JSON object per graph; absent bounds are null.
nlohmann::json report_to_json(const BoundReport& r, std::string_view graph6);

// CSV columns, in order:
//   graph6,n,m,energy,lambda1,t,t_nz,rank,det,
//   mcclelland_lower,caporossi,main,cor_nice,amgm,rank_bound,
//   mcclelland_upper,conj1,conj2,epsilon,beta,
//   is_connected,is_regular,is_triangle_free
// Absent values are empty fields.
std::string csv_header();
std::string report_to_csv_row(const BoundReport& r, std::string_view graph6);

void write_report_table(std::ostream& out, const BoundReport& r, std::string_view graph6);

nlohmann::json summary_to_json(const CorpusSummary& s);

}  // namespace geb
