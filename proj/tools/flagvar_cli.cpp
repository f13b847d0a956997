/* This is flagvar_cli.cpp */

#include "flagvar_cli.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagvar/errors.hpp"
#include "flagvar/git_unstable.hpp"
#include "flagvar/oracle.hpp"
#include "flagvar/rational.hpp"
#include "flagvar/root_datum.hpp"
#include "flagvar/vgit.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {
namespace {

using jsonx = nlohmann::ordered_json;

/* Exact "p" or "p/r" with r > 0; anything else is rejected. */
Rat parse_rational(const std::string& text) {
  const auto bad = [&text]() -> void {
    throw std::invalid_argument("rational must look like p or p/r, got '" + text + "'");
  };
  const std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) num = num.substr(1);
  if (num.empty() || den.empty()) bad();
  for (char c : num)
    if (c < '0' || c > '9') bad();
  for (char c : den)
    if (c < '0' || c > '9') bad();
  mpz_class p(slash == std::string::npos ? text : text.substr(0, slash));
  mpz_class r(den);
  if (r == 0) throw std::invalid_argument("rational denominator must be nonzero");
  mpq_class q(p, r);
  q.canonicalize();
  return Rat(q);
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string system_name(const RootDatum& d) {
  return std::string(1, static_cast<char>(d.family)) + std::to_string(d.rank);
}

/* Every word that reaches the output must recompose to its element. */
jsonx word_json(const RootDatum& d, const std::vector<int>& word, const WeylElement& w) {
  if (!(element_from_word(d, word) == w))
    throw InternalContradiction("printed word fails to round-trip");
  return jsonx(word);
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "-";
  std::string s;
  for (std::size_t a = 0; a < word.size(); ++a) {
    if (a) s += ' ';
    s += std::to_string(word[a]);
  }
  return s;
}

/* One piece of an unstable locus: the Bruhat-maximal antichain of a
   value stratum.  word/length describe the leading (largest) cell;
   words lists the whole antichain when it has several components. */
jsonx piece_json(const RootDatum& d, const Ladder& lad, int idx) {
  if (idx < 0) return jsonx(nullptr);
  const std::vector<WeylElement>& anti = lad.value_maxima[static_cast<std::size_t>(idx)];
  jsonx p;
  p["word"] = word_json(d, reduced_word(d, anti.front()), anti.front());
  p["length"] = anti.front().len;
  p["cells"] = anti.size();
  if (anti.size() > 1) {
    jsonx all = jsonx::array();
    for (const WeylElement& w : anti) all.push_back(word_json(d, reduced_word(d, w), w));
    p["words"] = all;
  }
  return p;
}

jsonx unstable_json(const RootDatum& d, const Ladder& lad, const UnstablePair& pr) {
  jsonx u;
  u["dominant"] = piece_json(d, lad, pr.dominant);
  u["antidominant"] = piece_json(d, lad, pr.antidominant);
  return u;
}

jsonx range_list(const IntRange& r) {
  jsonx a = jsonx::array();
  for (int j = r.lo; j <= r.hi; ++j) a.push_back(j);
  return a;
}

jsonx ladder_json(const RootDatum& d, const Ladder& lad, long long n) {
  jsonx arr = jsonx::array();
  for (int k = 0; k <= lad.k_max; ++k) {
    const WeylElement& m = lad.maxima[static_cast<std::size_t>(k)];
    jsonx e;
    e["k"] = k;
    e["word"] = word_json(d, lad.words[static_cast<std::size_t>(k)], m);
    e["length"] = m.len;
    e["wall_value"] = rat_str(Rat(rat_ll(n) * fixed_point_weight(d, lad.node, m)));
    arr.push_back(e);
  }
  return arr;
}

jsonx chambers_json(const RootDatum& d, const Ladder& lad, const ChamberReport& rep,
                    bool gorenstein) {
  jsonx arr = jsonx::array();
  for (const ChamberRecord& c : rep.chambers) {
    jsonx e;
    e["k"] = c.k;
    e["lower"] = rat_str(c.lower);
    e["upper"] = rat_str(c.upper);
    e["codim"] = c.codim;
    e["dim_unstable"] = c.dim_unstable;
    e["geometric"] = c.geometric;
    e["unstable"] = unstable_json(d, lad, c.pair);
    jsonx v;
    v["low"] = range_list(c.vanishing_low);
    v["high"] = gorenstein ? jsonx(range_list(c.vanishing_high)) : jsonx(nullptr);
    e["vanishing"] = v;
    arr.push_back(e);
  }
  return arr;
}

std::string location_name(const LocatedUnstable& loc) {
  switch (loc.location) {
    case AxisLocation::in_chamber:
      return "chamber " + std::to_string(loc.index);
    case AxisLocation::on_wall:
      return "wall " + std::to_string(loc.index);
    default:
      return "outside";
  }
}

jsonx query_json(const RootDatum& d, const Ladder& lad, const Rat& q, const LocatedUnstable& loc,
                 const std::optional<VanishingReport>& van) {
  jsonx qr;
  qr["q"] = rat_str(q);
  qr["location"] = location_name(loc);
  qr["unstable"] = unstable_json(d, lad, loc.pair);
  qr["codim"] = loc.codim;
  qr["geometric"] = loc.location == AxisLocation::in_chamber;
  if (van) {
    jsonx v;
    v["low"] = range_list(van->low);
    v["high"] = van->high ? range_list(*van->high) : jsonx(nullptr);
    qr["vanishing"] = v;
  } else {
    qr["vanishing"] = jsonx(nullptr);
  }
  return qr;
}

void print_range(std::ostream& out, const char* label, const IntRange& r) {
  out << label;
  if (r.empty())
    out << " none";
  else
    out << " " << r.lo << ".." << r.hi;
}

void print_piece_text(std::ostream& out, const RootDatum& d, const Ladder& lad, int idx,
                      const char* side) {
  out << "    " << side << ": ";
  if (idx < 0) {
    out << "empty\n";
    return;
  }
  const std::vector<WeylElement>& anti = lad.value_maxima[static_cast<std::size_t>(idx)];
  out << "dim " << anti.front().len;
  if (anti.size() > 1) out << ", " << anti.size() << " components";
  for (std::size_t a = 0; a < anti.size(); ++a)
    out << (a ? " | " : ", word ") << word_text(reduced_word(d, anti[a]));
  out << "\n";
}

int cmd_analyze(std::ostream& out, const std::string& type, int rank, int node, long long lambda_n,
                const std::string& q_text, const std::string& format, bool gorenstein) {
  if (lambda_n <= 0) throw std::invalid_argument("--lambda must be positive");
  const Rat q = parse_rational(q_text);
  const RootDatum d = build_root_datum(family_from_char(type[0]), rank);
  const Ladder lad = build_ladder(d, node);
  const ChamberReport rep = chamber_decomposition(lad, lambda_n);
  const Linearization lin = axis_linearization(d, node, lambda_n, q);
  const LocatedUnstable loc = unstable_at(lad, lin);
  std::optional<VanishingReport> van;
  if (loc.location == AxisLocation::in_chamber) van = vanishing_report(lad, lin, gorenstein);

  if (format == "json") {
    jsonx doc;
    doc["root_system"] = system_name(d);
    doc["node"] = node;
    doc["admissible"] = true;
    doc["dim_X"] = lad.quotient.dim();
    doc["k_max"] = lad.k_max;
    doc["ladder"] = ladder_json(d, lad, lambda_n);
    doc["chambers"] = chambers_json(d, lad, rep, gorenstein);
    doc["query"] = query_json(d, lad, q, loc, van);
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << system_name(d) << " node " << node << ": admissible, dim X = " << lad.quotient.dim()
      << ", k_max = " << lad.k_max << "\n";
  out << "ladder (wall values for lambda = " << lambda_n << " varpi_" << node << "):\n";
  for (int k = 0; k <= lad.k_max; ++k) {
    const WeylElement& m = lad.maxima[static_cast<std::size_t>(k)];
    out << "  k " << k << "  length " << m.len << "  wall "
        << rat_str(Rat(rat_ll(lambda_n) * fixed_point_weight(d, node, m))) << "  word "
        << word_text(lad.words[static_cast<std::size_t>(k)]) << "\n";
  }
  out << "chambers:\n";
  for (const ChamberRecord& c : rep.chambers) {
    out << "  chamber " << c.k << "  (" << rat_str(c.lower) << ", " << rat_str(c.upper)
        << ")  codim " << c.codim << "  dim " << c.dim_unstable << "  ";
    print_range(out, "vanishing low", c.vanishing_low);
    if (gorenstein) print_range(out, ", high", c.vanishing_high);
    out << "\n";
  }
  out << "query q = " << rat_str(q) << ": " << location_name(loc)
      << (loc.location == AxisLocation::in_chamber ? " (geometric quotient)" : "") << "\n";
  out << "  unstable locus: dim " << loc.dim_unstable << ", codim " << loc.codim << "\n";
  print_piece_text(out, d, lad, loc.pair.dominant, "dominant");
  print_piece_text(out, d, lad, loc.pair.antidominant, "antidominant (translated)");
  if (van) {
    out << "  ";
    print_range(out, "vanishing low", van->low);
    if (van->high) print_range(out, ", high", *van->high);
    out << "\n";
  }
  return 0;
}

int cmd_ladder(std::ostream& out, const std::string& type, int rank, int node,
               const std::string& format) {
  const RootDatum d = build_root_datum(family_from_char(type[0]), rank);
  const Ladder lad = build_ladder(d, node);

  if (format == "json") {
    jsonx doc;
    doc["root_system"] = system_name(d);
    doc["node"] = node;
    doc["admissible"] = true;
    doc["dim_X"] = lad.quotient.dim();
    doc["k_max"] = lad.k_max;
    doc["ladder"] = ladder_json(d, lad, 1);
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << system_name(d) << " node " << node << ": dim X = " << lad.quotient.dim() << ", k_max = "
      << lad.k_max << "\n";
  for (int k = 0; k <= lad.k_max; ++k) {
    const WeylElement& m = lad.maxima[static_cast<std::size_t>(k)];
    out << "  k " << k << "  length " << m.len << "  wall "
        << rat_str(fixed_point_weight(d, node, m)) << "  word "
        << word_text(lad.words[static_cast<std::size_t>(k)]) << "\n";
  }
  return 0;
}

int cmd_walls(std::ostream& out, const std::string& type, int rank, int node, long long lambda_n,
              const std::string& format, bool gorenstein) {
  if (lambda_n <= 0) throw std::invalid_argument("--lambda must be positive");
  const RootDatum d = build_root_datum(family_from_char(type[0]), rank);
  const Ladder lad = build_ladder(d, node);
  const ChamberReport rep = chamber_decomposition(lad, lambda_n);

  if (format == "json") {
    jsonx doc;
    doc["root_system"] = system_name(d);
    doc["node"] = node;
    doc["lambda_n"] = lambda_n;
    doc["max_twist"] = rat_str(rep.max_twist);
    doc["dim_X"] = rep.dim_x;
    jsonx walls = jsonx::array();
    for (const WallRecord& w : rep.wall_reports) {
      jsonx e;
      e["r"] = w.r;
      e["value"] = rat_str(w.value);
      e["codim"] = w.codim;
      e["dim_unstable"] = w.dim_unstable;
      e["geometric"] = w.geometric;
      e["unstable"] = unstable_json(d, lad, w.pair);
      walls.push_back(e);
    }
    doc["walls"] = walls;
    doc["chambers"] = chambers_json(d, lad, rep, gorenstein);
    jsonx arrows = jsonx::array();
    for (const InverseArrow& a : rep.inverse_system) {
      jsonx e;
      e["chamber"] = a.chamber;
      e["wall"] = a.wall;
      arrows.push_back(e);
    }
    doc["arrows"] = arrows;
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << system_name(d) << " node " << node << ", lambda = " << lambda_n << " varpi_" << node
      << ": twists with semistable points in [-" << rat_str(rep.max_twist) << ", "
      << rat_str(rep.max_twist) << "]\n";
  for (std::size_t r = 0; r < rep.wall_reports.size(); ++r) {
    const WallRecord& w = rep.wall_reports[r];
    out << "  wall " << w.r << " at " << rat_str(w.value) << "  codim " << w.codim << "\n";
    if (r < rep.chambers.size()) {
      const ChamberRecord& c = rep.chambers[r];
      out << "  chamber " << c.k << "  (" << rat_str(c.lower) << ", " << rat_str(c.upper)
          << ")  codim " << c.codim << "  ";
      print_range(out, "vanishing low", c.vanishing_low);
      if (gorenstein) print_range(out, ", high", c.vanishing_high);
      out << "\n";
    }
  }
  out << "inverse system:";
  for (const InverseArrow& a : rep.inverse_system)
    out << "  chamber " << a.chamber << " -> wall " << a.wall;
  out << "\n";
  return 0;
}

int cmd_admissible(std::ostream& out, int max_rank, const std::string& format) {
  const std::vector<AdmissibleEntry> table = admissible_table(max_rank);

  if (format == "json") {
    jsonx doc;
    doc["max_rank"] = max_rank;
    jsonx entries = jsonx::array();
    for (const AdmissibleEntry& e : table) {
      jsonx row;
      row["root_system"] = std::string(1, static_cast<char>(e.family)) + std::to_string(e.rank);
      row["node"] = e.node;
      row["admissible"] = e.admissible;
      entries.push_back(row);
    }
    doc["entries"] = entries;
    out << doc.dump(2) << "\n";
    return 0;
  }

  std::string current;
  bool any = false;
  for (const AdmissibleEntry& e : table) {
    const std::string name =
        std::string(1, static_cast<char>(e.family)) + std::to_string(e.rank);
    if (name != current) {
      if (!current.empty()) out << (any ? "" : " none") << "\n";
      out << name << " admissible nodes:";
      current = name;
      any = false;
    }
    if (e.admissible) {
      out << " " << e.node;
      any = true;
    }
  }
  if (!current.empty()) out << (any ? "" : " none") << "\n";
  return 0;
}

int cmd_oracle(std::ostream& out, const std::string& type, int rank, int node, long long lambda_n,
               const std::string& q_text, int samples, std::uint64_t seed,
               const std::string& format) {
  if (type != "A") throw std::invalid_argument("the sampling oracle needs --type A");
  const Rat q = parse_rational(q_text);
  const int n = rank + 1;
  const OracleReport r = compare(n, node, lambda_n, q, samples, seed);

  if (format == "json") {
    jsonx doc;
    doc["root_system"] = "A" + std::to_string(rank);
    doc["node"] = node;
    doc["n"] = r.n;
    doc["i"] = r.i;
    doc["lambda_n"] = r.lambda_n;
    doc["q"] = rat_str(r.q_value);
    doc["covered"] = r.covered;
    doc["cells"] = r.cells_checked;
    doc["samples_per_cell"] = r.samples_per_cell;
    doc["resampled"] = r.resampled;
    jsonx mm = jsonx::array();
    for (const OracleMismatch& m : r.mismatches) {
      jsonx e;
      e["piece"] = m.piece;
      e["cell"] = jsonx(m.cell);
      e["sample"] = m.sample;
      e["predicted_unstable"] = m.predicted_unstable;
      mm.push_back(e);
    }
    doc["mismatches"] = mm;
    out << doc.dump(2) << "\n";
  } else {
    out << "Gr(" << r.i << "," << r.n << ") lambda = " << r.lambda_n << ", q = "
        << rat_str(r.q_value) << ": " << r.cells_checked << " cells x " << r.samples_per_cell
        << " samples" << (r.covered ? "" : " (single piece, node not admissible)")
        << ", resampled " << r.resampled << ", mismatches " << r.mismatches.size() << "\n";
    for (const OracleMismatch& m : r.mismatches) {
      out << "  mismatch piece " << m.piece << " sample " << m.sample << " predicted "
          << (m.predicted_unstable ? "unstable" : "semistable") << " cell";
      for (int x : m.cell) out << " " << x;
      out << "\n";
    }
  }
  return r.mismatches.empty() ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact torus GIT on flag varieties"};
  app.require_subcommand(1);

  std::string type;
  std::string q_text = "0";
  std::string format = "text";
  int rank = 0;
  int node = 0;
  int samples = 50;
  int max_rank = 8;
  long long lambda_n = 1;
  std::uint64_t seed = 0;
  bool gorenstein = false;

  CLI::App* analyze = app.add_subcommand("analyze", "ladder, chambers and one twist query");
  CLI::App* ladder = app.add_subcommand("ladder", "the chain of stratum maxima");
  CLI::App* walls = app.add_subcommand("walls", "the full wall and chamber table");
  CLI::App* admissible = app.add_subcommand("admissible", "which nodes the analysis covers");
  CLI::App* oracle = app.add_subcommand("oracle", "sampled semistability versus the symbolic loci");

  for (CLI::App* sub : {analyze, ladder, walls, oracle}) {
    sub->add_option("--type", type, "root system family")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    sub->add_option("--rank", rank, "rank of the root system")->required();
    sub->add_option("--node", node, "marked node, Bourbaki numbering")->required();
  }
  for (CLI::App* sub : {analyze, walls, oracle})
    sub->add_option("--lambda", lambda_n, "coefficient n of the ample class n varpi_i");
  for (CLI::App* sub : {analyze, oracle})
    sub->add_option("--q", q_text, "twisting character, a rational p/r");
  for (CLI::App* sub : {analyze, walls})
    sub->add_flag("--gorenstein", gorenstein, "emit the high vanishing range");
  for (CLI::App* sub : {analyze, ladder, walls, admissible, oracle})
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  admissible->add_option("--max-rank", max_rank, "largest rank listed");
  oracle->add_option("--samples", samples, "sampled points per cell");
  oracle->add_option("--seed", seed, "sampling seed");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("flagvar");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze)
      return cmd_analyze(out, type, rank, node, lambda_n, q_text, format, gorenstein);
    if (*ladder) return cmd_ladder(out, type, rank, node, format);
    if (*walls) return cmd_walls(out, type, rank, node, lambda_n, format, gorenstein);
    if (*admissible) return cmd_admissible(out, max_rank, format);
    return cmd_oracle(out, type, rank, node, lambda_n, q_text, samples, seed, format);
  } catch (const NotAdmissible& e) {
    err << "inadmissible: " << e.what() << "\n";
    return 3;
  } catch (const InvalidType& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedRank& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DatumMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace flagvar
