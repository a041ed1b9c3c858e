#include "stabpat/json.hpp"

namespace stabpat {

namespace {

std::string text(const BigInt& n) { return to_decimal(n); }

std::string text(const Rational& q) { return q.get_str(10); }

template <typename T>
Json optional_value(const std::optional<T>& v)
{
  return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const Multiset& m)
{
  return Json(m.multiplicities());
}

Json to_json(const Distribution& d)
{
  Json counts = Json::object();
  for (const auto& [s, n] : d.counts)
    counts[std::to_string(s)] = text(n);
  return {{"multiset", to_json(d.multiset)},
          {"pattern", format_pattern(d.pattern)},
          {"counts", counts}};
}

Json to_json(const StabilityVerdict& v)
{
  Json out{{"pattern", format_pattern(v.pattern)},
           {"multiset", to_json(v.multiset)},
           {"canonical", v.canonical},
           {"s", optional_value(v.only_s)},
           {"stable_on_orbit", v.stable},
           {"orbit_size", v.orbit_size},
           {"words_enumerated", v.words_enumerated}};
  if (v.witness) {
    const auto& w = *v.witness;
    out["witness"] = {{"rearranged", to_json(w.rearranged)},
                      {"s", w.s},
                      {"count", text(w.base_count)},
                      {"rearranged_count", text(w.rearranged_count)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const PatternScan& r)
{
  Json skipped = Json::array();
  for (const auto& key : r.skipped)
    skipped.push_back(key);
  return {{"pattern", format_pattern(r.pattern)},
          {"verdict", r.verdict()},
          {"counterexample", r.counterexample ? to_json(*r.counterexample) : Json(nullptr)},
          {"cells_checked", r.cells_checked},
          {"cells_skipped", r.cells_skipped},
          {"words_enumerated", r.words_enumerated},
          {"skipped", skipped}};
}

Json to_json(const ScanReport& r)
{
  Json results = Json::array();
  for (const auto& p : r.results)
    results.push_back(to_json(p));
  return {{"family", r.family},
          {"max_size", r.options.max_size},
          {"max_letters", r.options.max_letters},
          {"s", optional_value(r.options.only_s)},
          {"results", results}};
}

Json to_json(const GapVectors& g)
{
  return {{"order", g.order},
          {"suffix_band", g.suffix_band},
          {"prefix_band", g.prefix_band},
          {"shared", g.shared},
          {"unshared", g.unshared}};
}

Json to_json(const ExtendabilityReport& r)
{
  return {{"pattern", format_pattern(r.pattern)},
          {"index", r.index},
          {"gaps", to_json(r.gaps)},
          {"extended_permutation", r.extended_permutation.to_string()},
          {"extended_multiset", to_json(r.extended_multiset)}};
}

Json to_json(const WitnessPair& w)
{
  return {{"pattern", format_pattern(w.pattern)},
          {"construction", w.construction},
          {"s", w.s},
          {"multiset", to_json(w.base)},
          {"swapped_multiset", to_json(w.swapped)},
          {"swapped_letters", {w.swapped_letters.first, w.swapped_letters.second}},
          {"count", text(w.base_count)},
          {"swapped_count", text(w.swapped_count)},
          {"letter_count", optional_value(w.letter_count)},
          {"first_offset", optional_value(w.first_offset)},
          {"second_offset", optional_value(w.second_offset)},
          {"smaller_letters", optional_value(w.smaller_letters)}};
}

Json to_json(const RunDecomposition& d)
{
  Json gaps = Json::array();
  for (const auto& g : d.gaps)
    gaps.push_back(g.to_string());
  Json runs = Json::array();
  for (const auto& r : d.runs)
    runs.push_back(r.to_string());
  return {{"index", d.index}, {"gaps", gaps}, {"runs", runs}};
}

Json to_json(const EulerianTable& t)
{
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& v : row)
      r.push_back(text(v));
    rows.push_back(r);
  }
  return {{"m_max", t.m_max}, {"rows", rows}};
}

Json to_json(const ATable& t)
{
  Json cells = Json::array();
  for (unsigned m = 0; m < t.cells.size(); ++m)
    for (unsigned k = 0; k < t.cells[m].size(); ++k)
      for (unsigned s = 0; s < t.cells[m][k].size(); ++s)
        cells.push_back({{"m", m}, {"k", k}, {"s", s}, {"value", text(t.cells[m][k][s])}});
  return {{"m_max", t.m_max}, {"cells", cells}};
}

Json to_json(const SeriesCheck& c)
{
  Json out{{"holds", c.holds}, {"degrees", c.degrees}};
  if (c.first_failure) {
    out["first_failure"] = {{"exponents", *c.first_failure},
                            {"lhs", text(c.lhs)},
                            {"rhs", text(c.rhs)}};
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

} // namespace stabpat
