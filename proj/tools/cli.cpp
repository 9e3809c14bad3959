#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fqtype/criteria.hpp"
#include "fqtype/stats.hpp"
#include "fqtype/text.hpp"

namespace fqtype::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string field;
  std::string modulus;
  std::string poly;
  int m = 0;
  std::optional<std::string> s;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  double tolerance = 3.0;
  std::string format = "json";
  std::string out;
  int dmax = 4;
  bool lemma21 = false;
};

// Parsed inputs shared by the subcommands.
struct Inputs {
  FieldPtr field;
  std::optional<UniPoly> f;
  std::optional<Elem> s;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_modulus(const FieldCtx& F) {
  std::string out;
  for (std::size_t i = 0; i < F.modulus().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(F.modulus()[i]);
  }
  return out;
}

std::string canonical_config(const RunConfig& c, const Inputs& in) {
  std::ostringstream os;
  os << "command=" << c.command << " field=" << in.field->spec() << " modulus=" << join_modulus(*in.field);
  if (in.f) os << " poly=" << to_string(*in.f);
  if (c.command == "dist") os << " m=" << c.m;
  if (in.s) os << " s=" << in.s->v;
  if (c.command == "dist" || c.command == "badsweep")
    os << " sample=" << (c.sample ? std::to_string(*c.sample) : std::string("exhaustive"));
  if (c.command == "badsweep") os << " tolerance=" << format_double(c.tolerance);
  if (c.command == "conjecture") os << " dmax=" << c.dmax;
  if (c.lemma21) os << " lemma21=1";
  os << " seed=" << c.seed << " format=" << c.format;
  return os.str();
}

Json encodings(const UniPoly& f) { return Json(f.encodings()); }

Json elems(const std::vector<Elem>& v) {
  Json a = Json::array();
  for (Elem e : v) a.push_back(e.v);
  return a;
}

std::string rational(const Rational& r) { return r.str(); }

Json header(const RunConfig& c, const Inputs& in) {
  Json h;
  h["tool"] = "fqtype";
  h["version"] = FQTYPE_VERSION;
  h["command"] = c.command;
  h["config"] = canonical_config(c, in);
  h["seed"] = c.seed;
  return h;
}

std::string csv_preamble(const RunConfig& c, const Inputs& in) {
  return std::string("# fqtype ") + FQTYPE_VERSION + "\n# config: " + canonical_config(c, in) +
         "\n# seed: " + std::to_string(c.seed) + "\n";
}

std::string json_document(const RunConfig& c, const Inputs& in, Json report) {
  Json doc = header(c, in);
  doc["report"] = std::move(report);
  return doc.dump(2) + "\n";
}

void require_json(const RunConfig& c) {
  if (c.format != "json") throw std::invalid_argument("csv output is not available for " + c.command);
}

Json bounds_json(const BadSetBounds& b) { return Json{{"B1", b.B1}, {"B2", b.B2}, {"B", b.B}, {"total", b.total}}; }

Json locus_json(const BadSetLocus& l) {
  return Json{{"locus", to_string(l.locus, 'S')},
              {"locus_coeffs", encodings(l.locus)},
              {"roots_in_field", elems(l.roots_in_field)},
              {"distinct_roots", l.distinct_roots}};
}

struct Outcome {
  std::string text;
  int code = kPass;
};

Outcome cmd_check(const RunConfig& c, const Inputs& in) {
  require_json(c);
  const UniPoly& f = *in.f;
  const CriterionReport r = check_main_theorem(f);
  const auto& h = r.hypotheses;
  Json rep;
  rep["f"] = to_string(f);
  rep["f_coeffs"] = encodings(f);
  rep["field"] = in.field->spec();
  rep["hypotheses"] = Json{{"d2f_nonzero", h.d2f_nonzero},
                           {"deg_fprime_ge_1", h.deg_fprime_ge_1},
                           {"gcd_condition", h.gcd_condition},
                           {"fprimeprime_nonzero", h.fprimeprime_nonzero},
                           {"q_coprime_2d", h.q_coprime_2d},
                           {"q_coprime_d_dminus1", h.q_coprime_d_dminus1}};
  rep["gcd"] = r.gcd_polynomial ? Json(to_string(*r.gcd_polynomial)) : Json(nullptr);
  const bool linearized = is_affine_linearized(f);
  rep["verdicts"] = Json{{"main_theorem", r.main_theorem},
                         {"prop_kr", r.prop_kr},
                         {"thm_duke", r.thm_duke},
                         {"morse", is_morse(f)},
                         {"affine_linearized", linearized}};
  rep["bounds"] = bounds_json(bad_set_bounds(r.d));
  Json candidates = nullptr;
  if (r.main_theorem) candidates = elems(bad_sets(f).candidates);
  rep["bad_s_candidates"] = candidates;
  if (c.lemma21) rep["lemma21_bad_s"] = linearized ? Json(nullptr) : elems(bad_set_lemma21(f, in.field));
  return {json_document(c, in, std::move(rep)), r.main_theorem ? kPass : kFail};
}

Outcome cmd_badset(const RunConfig& c, const Inputs& in) {
  require_json(c);
  const BadSetReport r = bad_sets(*in.f, c.lemma21);
  Json rep;
  rep["f"] = to_string(*in.f);
  rep["field"] = in.field->spec();
  rep["B1"] = locus_json(r.B1);
  rep["B2"] = locus_json(r.B2);
  rep["bounds"] = bounds_json(r.bounds);
  rep["bad_s_candidates"] = elems(r.candidates);
  rep["note"] = "B2 roots are candidates; the locus can also vanish at values from diagonal points";
  if (r.lemma21_bad_s) rep["lemma21_bad_s"] = elems(*r.lemma21_bad_s);
  return {json_document(c, in, std::move(rep))};
}

SweepMode sweep_mode(const RunConfig& c) {
  return c.sample ? SweepMode::sample(*c.sample, c.seed) : SweepMode::exhaustive();
}

Outcome cmd_dist(const RunConfig& c, const Inputs& in) {
  const DistributionReport r = interval_distribution(*in.f, c.m, in.s, sweep_mode(c));
  const double root_q = std::sqrt(static_cast<double>(r.q));
  if (c.format == "csv") {
    std::string text = csv_preamble(c, in) + "partition;count;probability;reference;deviation;scaled_deviation\n";
    for (const auto& [lambda, count] : r.counts) {
      const Rational dev = r.deviation(lambda);
      text += lambda.to_string() + ";" + std::to_string(count) + ";" + rational(r.probabilities.at(lambda)) + ";" +
              rational(r.reference.at(lambda)) + ";" + rational(dev) + ";" +
              format_double(static_cast<double>(dev) * root_q) + "\n";
    }
    return {text};
  }
  Json rep;
  rep["f"] = to_string(r.f);
  rep["f_coeffs"] = encodings(r.f);
  rep["m"] = r.m;
  rep["s"] = r.s ? Json(r.s->v) : Json(nullptr);
  rep["q"] = r.q;
  rep["d"] = r.d;
  rep["mode"] = r.mode.sampled ? Json{{"kind", "sampled"}, {"n", r.mode.n}, {"seed", r.mode.seed}}
                               : Json{{"kind", "exhaustive"}};
  rep["total"] = r.total;
  Json rows = Json::array();
  for (const auto& [lambda, count] : r.counts) {
    rows.push_back(Json{{"partition", lambda.to_string()},
                        {"count", count},
                        {"probability", rational(r.probabilities.at(lambda))},
                        {"reference", rational(r.reference.at(lambda))},
                        {"deviation", rational(r.deviation(lambda))}});
  }
  rep["types"] = rows;
  rep["max_abs_deviation"] = rational(r.max_abs_deviation);
  rep["scaled_deviation"] = r.scaled_deviation;
  rep["total_variation"] = rational(r.total_variation);
  return {json_document(c, in, std::move(rep))};
}

Outcome cmd_badsweep(const RunConfig& c, const Inputs& in) {
  const BadSweepReport r = count_bad_s(*in.f, c.tolerance, sweep_mode(c));
  if (c.format == "csv") {
    std::string text = csv_preamble(c, in) + "s;scaled_deviation;irreducible_scaled_deviation;flagged\n";
    for (std::uint64_t s = 0; s < r.q; ++s) {
      const bool flagged = r.scaled_deviation[s] > r.C;
      text += std::to_string(s) + ";" + format_double(r.scaled_deviation[s]) + ";" +
              format_double(r.irreducible_scaled_deviation[s]) + ";" + (flagged ? "1" : "0") + "\n";
    }
    return {text};
  }
  Json rep;
  rep["f"] = to_string(*in.f);
  rep["q"] = r.q;
  rep["d"] = r.d;
  rep["C"] = r.C;
  rep["bad_count"] = r.flagged.size();
  rep["bound"] = r.bound;
  rep["flagged"] = elems(r.flagged);
  rep["median_irreducible_scaled_deviation"] = r.median_irreducible_scaled;
  rep["scaled_deviation"] = r.scaled_deviation;
  rep["irreducible_scaled_deviation"] = r.irreducible_scaled_deviation;
  return {json_document(c, in, std::move(rep))};
}

Outcome cmd_conjecture(const RunConfig& c, const Inputs& in) {
  require_json(c);
  const ConjectureScanReport r = conjecture_scan(in.field, c.dmax);
  Json rep;
  rep["field"] = r.field;
  rep["dmax"] = r.d_max;
  rep["scanned"] = r.scanned;
  rep["checked"] = r.checked;
  rep["counterexamples"] = Json::array();
  for (const auto& f : r.counterexamples) rep["counterexamples"].push_back(to_string(f));
  Json skip;
  skip["fprimeprime_zero"] = r.skipped_by_hypothesis;
  skip["with_common_factor"] = r.skipped_with_common_factor;
  skip["examples"] = Json::array();
  for (const auto& f : r.skipped_common_factor_examples) skip["examples"].push_back(to_string(f));
  rep["skipped"] = skip;
  return {json_document(c, in, std::move(rep))};
}

Outcome cmd_morse_scan(const RunConfig& c, const Inputs& in) {
  const UniPoly& f = *in.f;
  const std::uint32_t q = in.field->q();
  std::vector<Elem> morse;
  for (std::uint32_t s = 0; s < q; ++s) {
    const UniPoly g = f + UniPoly::monomial(in.field, Elem{s}, 1);
    if (is_morse(g)) morse.push_back(Elem{s});
  }
  if (c.format == "csv") {
    std::string text = csv_preamble(c, in) + "s;morse\n";
    std::size_t next = 0;
    for (std::uint32_t s = 0; s < q; ++s) {
      const bool hit = next < morse.size() && morse[next].v == s;
      if (hit) ++next;
      text += std::to_string(s) + ";" + (hit ? "1" : "0") + "\n";
    }
    return {text};
  }
  Json rep;
  rep["f"] = to_string(f);
  rep["q"] = q;
  rep["morse_count"] = morse.size();
  rep["morse_s"] = elems(morse);
  return {json_document(c, in, std::move(rep))};
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

Elem parse_element(const FieldPtr& field, const std::string& text) {
  const UniPoly p = parse_unipoly(field, text);
  if (p.degree() > 0) throw std::invalid_argument("expected a field element, got " + text);
  return p.coeff(0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Factorization-type statistics and equidistribution criteria over finite fields", "fqtype"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FQTYPE_VERSION);

  auto add_common = [&](CLI::App* sub, bool with_poly) {
    sub->add_option("--field", cfg.field, "Field as p or p^k")->required();
    sub->add_option("--modulus", cfg.modulus, "Defining modulus digits c0,c1,...,1");
    if (with_poly) sub->add_option("--poly", cfg.poly, "Polynomial in T, e.g. T^12+T^3")->required();
    sub->add_option("--seed", cfg.seed, "Seed for sampling and random splitting");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Write the report to this path");
  };
  CLI::App* check = app.add_subcommand("check", "Evaluate the equidistribution criteria for f");
  add_common(check, true);
  check->add_flag("--lemma21", cfg.lemma21, "Also search F_q for s with tilde(f)+s geometrically reducible");
  CLI::App* dist = app.add_subcommand("dist", "Factorization-type distribution over a short interval");
  add_common(dist, true);
  dist->add_option("--m", cfg.m, "Interval parameter (0 or 1)")->check(CLI::Range(0, 1));
  dist->add_option("--s", cfg.s, "Fixed coefficient of T for m = 0");
  dist->add_option("--sample", cfg.sample, "Sample size instead of exhaustive enumeration");
  CLI::App* badset = app.add_subcommand("badset", "Loci of the exceptional values of s");
  add_common(badset, true);
  badset->add_flag("--lemma21", cfg.lemma21, "Also search F_q for s with tilde(f)+s geometrically reducible");
  CLI::App* badsweep = app.add_subcommand("badsweep", "Count s whose interval deviates beyond C/sqrt(q)");
  add_common(badsweep, true);
  badsweep->add_option("--tolerance", cfg.tolerance, "Constant C");
  badsweep->add_option("--sample", cfg.sample, "Samples per s instead of exhaustive enumeration");
  CLI::App* conjecture = app.add_subcommand("conjecture", "Scan monic f for a common factor of the gcd pair");
  add_common(conjecture, false);
  conjecture->add_option("--dmax", cfg.dmax, "Largest degree scanned")->check(CLI::Range(2, 8));
  CLI::App* morse = app.add_subcommand("morse-scan", "List s with f(T)+sT Morse");
  add_common(morse, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Inputs in;
    in.field = parse_field(cfg.field, cfg.modulus);
    if (!cfg.poly.empty()) in.f = parse_unipoly(in.field, cfg.poly);
    if (cfg.s) in.s = parse_element(in.field, *cfg.s);
    if (in.f && in.f->degree() < 2) throw std::invalid_argument("polynomial must have degree at least 2");

    Outcome result;
    if (cfg.command == "check") result = cmd_check(cfg, in);
    else if (cfg.command == "dist") result = cmd_dist(cfg, in);
    else if (cfg.command == "badset") result = cmd_badset(cfg, in);
    else if (cfg.command == "badsweep") result = cmd_badsweep(cfg, in);
    else if (cfg.command == "conjecture") result = cmd_conjecture(cfg, in);
    else result = cmd_morse_scan(cfg, in);

    if (cfg.out.empty()) {
      out << result.text;
    } else {
      write_atomically(cfg.out, result.text);
    }
    return result.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace fqtype::cli
