#include "stabpat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>

#include "stabpat/bijections.hpp"
#include "stabpat/cache.hpp"
#include "stabpat/errors.hpp"
#include "stabpat/eulerian.hpp"
#include "stabpat/extendability.hpp"
#include "stabpat/json.hpp"
#include "stabpat/stability.hpp"

namespace stabpat::cli {

namespace {

struct Globals {
  bool json = false;
  std::string cache_path;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;

  RunOptions run() const { return {budget, threads}; }
};

void emit(std::ostream& out, const Json& doc)
{
  out << doc.dump(2) << '\n';
}

std::string exponents_text(const Exponents& e)
{
  std::string out = "(";
  for (std::size_t v = 0; v < e.size(); ++v)
    out += (v ? "," : "") + std::to_string(e[v]);
  return out + ")";
}

class Session {
public:
  Session(const Globals& g, std::ostream& out) : g_(g), out_(out)
  {
    if (!g.cache_path.empty())
      cache_ = std::make_unique<ResultCache>(g.cache_path);
  }

  int count(const std::string& pattern, const std::string& word)
  {
    const auto p = parse_pattern(pattern);
    const auto w = parse_word(word);
    const auto n = count_occurrences(p, w);
    if (g_.json)
      emit(out_, {{"pattern", format_pattern(p)},
                  {"word", w.to_string()},
                  {"count", to_decimal(n)}});
    else
      out_ << to_decimal(n) << '\n';
    return kExitOk;
  }

  int dist(const std::string& pattern, const std::string& multiset)
  {
    const auto d = cached_distribution(parse_multiset(multiset), parse_pattern(pattern));
    if (g_.json) {
      emit(out_, to_json(d));
    } else {
      for (const auto& [s, n] : d.counts)
        out_ << s << ' ' << to_decimal(n) << '\n';
    }
    return kExitOk;
  }

  int stability(const std::string& pattern, const std::string& multiset,
                std::optional<std::uint64_t> s)
  {
    const auto p = parse_pattern(pattern);
    const auto m = parse_multiset(multiset);
    const auto v = s ? is_i_stable_on(m, p, *s, g_.run()) : is_stable_on(m, p, g_.run());
    if (g_.json) {
      emit(out_, to_json(v));
    } else if (v.stable) {
      out_ << "stable-on-orbit " << v.orbit_size << '\n';
    } else {
      const auto& w = *v.witness;
      out_ << "unstable " << m.to_string() << ' ' << w.rearranged.to_string() << " s=" << w.s
           << ' ' << to_decimal(w.base_count) << ' ' << to_decimal(w.rearranged_count) << '\n';
    }
    return kExitOk;
  }

  int scan(const std::string& family, std::uint32_t max_size, std::size_t max_letters,
           std::optional<std::uint64_t> s, const std::string& csv_path)
  {
    ScanOptions options;
    options.max_size = max_size;
    options.max_letters = max_letters;
    options.only_s = s;
    options.run = g_.run();
    const auto report = stabpat::scan(parse_family(family), options);
    const auto csv = scan_csv(report);
    if (!csv_path.empty()) {
      std::ofstream file(csv_path);
      if (!file)
        throw std::runtime_error("cannot write " + csv_path);
      file << csv;
    }
    if (g_.json)
      emit(out_, to_json(report));
    else
      out_ << csv;
    return kExitOk;
  }

  int bijection(const std::string& name, std::size_t i, const std::string& word,
                const std::string& check)
  {
    const auto w = parse_word(word);
    Word image;
    if (name == "psi")
      image = psi(w, i);
    else if (name == "phi")
      image = phi(w, i);
    else if (name == "theta")
      image = theta(w, i);
    else if (name == "tau")
      image = tau(w, i);
    else
      throw std::invalid_argument("unknown bijection '" + name + "'");

    Json doc{{"map", name},
             {"index", i},
             {"word", w.to_string()},
             {"image", image.to_string()},
             {"runs", to_json(decompose(w, i))}};
    if (!check.empty()) {
      const auto p = parse_pattern(check);
      const auto before = count_occurrences(p, w);
      const auto after = count_occurrences(p, image);
      doc["check"] = {{"pattern", format_pattern(p)},
                      {"before", to_decimal(before)},
                      {"after", to_decimal(after)}};
      if (!g_.json)
        out_ << image.to_string() << ' ' << format_pattern(p) << ' ' << to_decimal(before)
             << ' ' << to_decimal(after) << '\n';
    } else if (!g_.json) {
      out_ << image.to_string() << '\n';
    }
    if (g_.json)
      emit(out_, doc);
    return kExitOk;
  }

  int extend(const std::string& pattern, std::optional<std::size_t> index)
  {
    const auto p = parse_pattern(pattern);
    const auto r = stabpat::extend(p, index ? *index : minimal_extendable_index(p));
    if (g_.json)
      emit(out_, to_json(r));
    else
      out_ << "index " << r.index << '\n'
           << "permutation " << r.extended_permutation.to_string() << '\n'
           << "multiset " << r.extended_multiset.to_string() << '\n';
    return kExitOk;
  }

  int witness(const std::string& pattern)
  {
    const auto p = parse_pattern(pattern);
    std::optional<WitnessPair> w;
    if (p.is_consecutive() && p.length() > 1)
      w = consecutive_instability_witness(p, g_.run());
    else if (p.is_classical())
      w = classical_instability_witness(p, g_.run());
    else
      throw std::invalid_argument("witness needs a classical or consecutive pattern");
    if (!w) {
      if (g_.json)
        emit(out_, {{"pattern", format_pattern(p)}, {"witness", nullptr}});
      else
        out_ << "no witness from the extended multiset\n";
      return kExitCheckFailed;
    }
    if (g_.json)
      emit(out_, to_json(*w));
    else
      out_ << w->base.to_string() << ' ' << w->swapped.to_string() << " s=" << w->s << ' '
           << to_decimal(w->base_count) << ' ' << to_decimal(w->swapped_count) << '\n';
    return kExitOk;
  }

  int eulerian(unsigned max_m)
  {
    const auto table = a_table(max_m);
    if (cache_) {
      for (unsigned m = 1; m < table.cells.size(); ++m)
        for (unsigned k = 0; k < table.cells[m].size(); ++k) {
          std::vector<std::uint32_t> key(k, 2);
          key.resize(m - k, 1);
          for (unsigned s = 0; s < table.cells[m][k].size(); ++s)
            if (table.cells[m][k][s] != 0)
              cache_->store({make_cache_key(Multiset(key), parse_pattern("12"), s),
                             table.cells[m][k][s], "recurrence"});
        }
    }
    if (g_.json) {
      emit(out_, {{"eulerian", to_json(eulerian_table(max_m))}, {"a_table", to_json(table)}});
    } else {
      out_ << "m,k,s,value\n";
      for (unsigned m = 0; m < table.cells.size(); ++m)
        for (unsigned k = 0; k < table.cells[m].size(); ++k)
          for (unsigned s = 0; s < table.cells[m][k].size(); ++s)
            out_ << m << ',' << k << ',' << s << ',' << to_decimal(table.cells[m][k][s])
                 << '\n';
    }
    return kExitOk;
  }

  int verify_gf(const std::string& which, const std::string& multiset, std::uint64_t s)
  {
    if (which != "12" && which != "21")
      throw std::invalid_argument("verify-gf supports 12 and 21");
    const auto m = parse_multiset(multiset);
    const BigInt series =
        which == "12" ? macmahon_coefficient(m, s, g_.run()) : gf21_coefficient(m, s, g_.run());
    const BigInt brute = cached_distribution(m, parse_pattern(which)).at(s);
    const bool pass = series == brute;
    if (pass && cache_)
      cache_->store({make_cache_key(m, parse_pattern(which), s), series,
                     which == "12" ? "macmahon" : "recurrence"});
    if (g_.json)
      emit(out_, {{"pattern", which},
                  {"multiset", to_json(m)},
                  {"s", s},
                  {"series", to_decimal(series)},
                  {"bruteforce", to_decimal(brute)},
                  {"pass", pass}});
    else
      out_ << (pass ? "pass " : "fail ") << to_decimal(series) << ' ' << to_decimal(brute)
           << '\n';
    return pass ? kExitOk : kExitCheckFailed;
  }

  int verify_pde(unsigned x, unsigned y, unsigned z)
  {
    const auto c = stabpat::verify_pde(x, y, z);
    if (g_.json) {
      emit(out_, to_json(c));
    } else if (c.holds) {
      out_ << "pass\n";
    } else {
      out_ << "fail at " << exponents_text(*c.first_failure) << ' ' << c.lhs.get_str() << ' '
           << c.rhs.get_str() << '\n';
    }
    return c.holds ? kExitOk : kExitCheckFailed;
  }

  int cache(const std::string& action)
  {
    if (!cache_)
      throw std::invalid_argument("cache needs --cache <path>");
    if (action == "clear")
      cache_->clear();
    else if (action != "stats")
      throw std::invalid_argument("cache action must be stats or clear");
    const auto counts = cache_->provenance_counts();
    if (g_.json) {
      Json by = Json::object();
      for (const auto& [k, n] : counts)
        by[k] = n;
      emit(out_, {{"path", cache_->path().string()},
                  {"entries", cache_->size()},
                  {"provenance", by}});
    } else {
      out_ << "entries " << cache_->size() << '\n';
      for (const auto& [k, n] : counts)
        out_ << k << ' ' << n << '\n';
    }
    return kExitOk;
  }

private:
  Distribution cached_distribution(const Multiset& m, const Pattern& p)
  {
    if (cache_) {
      if (auto hit = cache_->lookup_distribution(m, p))
        return *hit;
    }
    auto d = distribution(m, p, g_.run());
    if (cache_)
      cache_->store_distribution(d, "bruteforce");
    return d;
  }

  const Globals& g_;
  std::ostream& out_;
  std::unique_ptr<ResultCache> cache_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Pattern distributions over multiset permutations", "stabpat"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit one JSON document");
  app.add_option("--cache", g.cache_path, "Result cache file (JSON lines)");
  app.add_option("--budget", g.budget, "Maximum number of words to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::string pattern, text, name, family = "consecutive:3", csv_path, action;
  std::size_t index = 1;
  std::optional<std::size_t> extend_index;
  std::optional<std::uint64_t> only_s;
  std::uint64_t s = 0;
  std::uint32_t max_size = 6;
  std::size_t max_letters = 4;
  unsigned max_m = 9, xdeg = 8, ydeg = 4, zdeg = 8;

  auto* count = app.add_subcommand("count", "Occurrences of a pattern in a word");
  count->add_option("pattern", pattern)->required();
  count->add_option("word", text)->required();

  auto* dist = app.add_subcommand("dist", "Distribution s -> |M*(p;s)|");
  dist->add_option("pattern", pattern)->required();
  dist->add_option("multiset", text)->required();

  auto* stab = app.add_subcommand("stability", "Compare distributions across the orbit");
  stab->add_option("pattern", pattern)->required();
  stab->add_option("multiset", text)->required();
  stab->add_option("--s", only_s, "Compare only |M*(p;s)|");

  auto* scan = app.add_subcommand("scan", "Search a pattern family for instability");
  scan->add_option("--family", family, "consecutive:L[-L2], classical:L, list:p;q, "
                                       "known-stable or vincular-plateau");
  scan->add_option("--max-size", max_size)->check(CLI::Range(1u, 64u));
  scan->add_option("--max-letters", max_letters)->check(CLI::Range(1u, 64u));
  scan->add_option("--s", only_s, "Compare only |M*(p;s)|");
  scan->add_option("--csv", csv_path, "Also write the CSV summary to a file");

  auto* bij = app.add_subcommand("bijection", "Apply psi, phi, theta or tau");
  bij->add_option("map", name)->required()->check(CLI::IsMember({"psi", "phi", "theta", "tau"}));
  bij->add_option("index", index)->required();
  bij->add_option("word", text)->required();
  bij->add_option("--check", pattern, "Report occurrence counts before and after");

  auto* ext = app.add_subcommand("extend", "Extended permutation and multiset");
  ext->add_option("pattern", pattern)->required();
  ext->add_option("--index", extend_index);

  auto* wit = app.add_subcommand("witness", "Instability witness pair");
  wit->add_option("pattern", pattern)->required();

  auto* eul = app.add_subcommand("eulerian", "Generalized Eulerian table A(m,k,s)");
  eul->add_option("--max-m", max_m)->check(CLI::Range(0u, 200u));

  auto* vgf = app.add_subcommand("verify-gf", "Series coefficient against enumeration");
  vgf->add_option("pattern", name)->required()->check(CLI::IsMember({"12", "21"}));
  vgf->add_option("multiset", text)->required();
  vgf->add_option("s", s)->required();

  auto* vpde = app.add_subcommand("verify-pde", "Check the PDE for A(x,y,z)");
  vpde->add_option("--xdeg", xdeg);
  vpde->add_option("--ydeg", ydeg);
  vpde->add_option("--zdeg", zdeg);

  auto* cache = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"stats", "clear"}));

  std::vector<std::string> storage{"stabpat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session session(g, out);
    if (count->parsed())
      return session.count(pattern, text);
    if (dist->parsed())
      return session.dist(pattern, text);
    if (stab->parsed())
      return session.stability(pattern, text, only_s);
    if (scan->parsed())
      return session.scan(family, max_size, max_letters, only_s, csv_path);
    if (bij->parsed())
      return session.bijection(name, index, text, pattern);
    if (ext->parsed())
      return session.extend(pattern, extend_index);
    if (wit->parsed())
      return session.witness(pattern);
    if (eul->parsed())
      return session.eulerian(max_m);
    if (vgf->parsed())
      return session.verify_gf(name, text, s);
    if (vpde->parsed())
      return session.verify_pde(xdeg, ydeg, zdeg);
    if (cache->parsed())
      return session.cache(action);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace stabpat::cli
