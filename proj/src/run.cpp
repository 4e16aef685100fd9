#include "sympair/run.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sympair/chevalley.hpp"
#include "sympair/errors.hpp"
#include "sympair/invariants.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

namespace {

constexpr CheckKind kAllChecks[] = {CheckKind::Restriction, CheckKind::Charpoly,
                                    CheckKind::BlockCharpoly, CheckKind::Weyl,
                                    CheckKind::Pfaffian, CheckKind::KronDet,
                                    CheckKind::Generation};

std::string normalize_key(std::string_view key) {
  std::string k(key);
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty())
    throw UsageError("invalid value '" + std::string(value) + "' for " + std::string(key));
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw UsageError("invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

Outcome outcome_of(bool passed) { return passed ? Outcome::Pass : Outcome::Fail; }

nlohmann::ordered_json poly_json(const RPoly& p) { return to_strings(p); }

// Runs `body(trial)` for every trial, possibly on several threads, and
// concatenates the per-trial records in trial order.
template <typename Body>
std::vector<ReportRecord> for_each_trial(std::size_t trials, unsigned threads, Body body) {
  std::vector<std::vector<ReportRecord>> per_trial(trials);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) per_trial[t] = body(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t t = next.fetch_add(1);
          if (t >= trials) return;
          try {
            per_trial[t] = body(t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<ReportRecord> out;
  for (auto& v : per_trial)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

std::string describe(const PairDescriptor& p, std::size_t d, std::uint64_t seed) {
  return p.label() + " d=" + std::to_string(d) + " seed=" + std::to_string(seed);
}

ReportRecord make_record(std::string check, std::size_t trial, std::string input, Outcome outcome,
                         nlohmann::ordered_json lhs, nlohmann::ordered_json rhs,
                         nlohmann::ordered_json detail, Clock::time_point start) {
  std::string digest = fnv1a_hex(input);
  return ReportRecord{std::move(check), trial,          std::move(input), std::move(digest),
                      outcome,          std::move(lhs), std::move(rhs),   std::move(detail),
                      micros_since(start)};
}

nlohmann::ordered_json weyl_json(const WeylElement& w) {
  nlohmann::ordered_json j;
  std::vector<std::size_t> perm;
  for (auto x : w.permutation) perm.push_back(x + 1);
  j["permutation"] = perm;
  j["signs"] = w.signs;
  return j;
}

std::vector<ReportRecord> run_restriction(const RunConfig& c, const PairDescriptor& p,
                                          const std::vector<TraceWord>& words) {
  return for_each_trial(c.trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(c.seed, "restriction", t);
    const Trial trial = sample_trial(p, c.d, seed, c.bound);
    WordEvaluator eval(trial.tuple);
    std::vector<ReportRecord> out;
    for (const auto& w : words) {
      const auto start = Clock::now();
      const IdentityCheck chk = check_restriction_identity(trial, eval, w, seed);
      const std::string text = to_text(w);
      out.push_back(make_record("restriction", t, describe(p, c.d, seed) + " word=" + text,
                                outcome_of(chk.passed), to_string(chk.lhs), to_string(chk.rhs),
                                {{"word", text}}, start));
    }
    return out;
  });
}

std::vector<ReportRecord> run_poly(const RunConfig& c, const PairDescriptor& p,
                                   const std::vector<TraceWord>& words, CheckKind kind) {
  const std::string name(to_string(kind));
  return for_each_trial(c.trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(c.seed, name, t);
    const Trial trial = sample_trial(p, c.d, seed, c.bound);
    std::vector<ReportRecord> out;
    for (const auto& w : words) {
      const auto start = Clock::now();
      const PolyCheck chk = kind == CheckKind::Charpoly ? check_charpoly_factorization(trial, w)
                                                        : check_block_charpoly(trial, w);
      const std::string text = to_text(w);
      nlohmann::ordered_json detail{{"word", text}};
      if (p.kind() == PairKind::AII) {
        detail["perfect_square"] = chk.root.has_value();
        if (chk.root) detail["root"] = poly_json(*chk.root);
      }
      out.push_back(make_record(name, t, describe(p, c.d, seed) + " word=" + text,
                                outcome_of(chk.passed), poly_json(chk.lhs), poly_json(chk.rhs),
                                std::move(detail), start));
    }
    return out;
  });
}

std::vector<ReportRecord> run_weyl(const RunConfig& c, const PairDescriptor& p,
                                   const std::vector<TraceWord>& words) {
  return for_each_trial(c.trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(c.seed, "weyl", t);
    Rng rng(seed);
    const CartanPoint pt = sample_cartan_point(p, c.d, rng, c.bound);
    const WeylElement w = sample_weyl(p, rng);
    std::vector<ReportRecord> out;
    for (const auto& word : words) {
      const auto start = Clock::now();
      const ValueCheck chk = check_weyl_invariance(p, c.d, word, w, pt);
      const std::string text = to_text(word);
      out.push_back(make_record("weyl", t, describe(p, c.d, seed) + " word=" + text,
                                outcome_of(chk.passed), to_string(chk.lhs), to_string(chk.rhs),
                                {{"word", text}, {"weyl", weyl_json(w)}}, start));
    }
    return out;
  });
}

std::vector<ReportRecord> run_pfaffian(const RunConfig& c, const PairDescriptor& p) {
  const Rational expected_sign = pfaffian_norm(RMatrix::identity(p.ambient_dim()), p);
  return for_each_trial(c.trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(c.seed, "pfaffian", t);
    const std::string base = describe(p, c.d, seed);
    Rng rng(seed);
    std::vector<ReportRecord> out;

    auto start = Clock::now();
    const ValueCheck generic = check_pfaffian_square(p, sample_g1(p, rng, c.bound));
    out.push_back(make_record("pfaffian", t, base + " item=random_g1", outcome_of(generic.passed),
                              to_string(generic.lhs), to_string(generic.rhs),
                              {{"item", "random_g1"}, {"identity", "det(x) = N+(x)^2"}}, start));

    if (c.d == 0) return out;
    const Trial trial = sample_trial(p, c.d, derive_seed(seed, "tuple", t), c.bound);
    const auto& xs = trial.tuple.mats;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      start = Clock::now();
      const ValueCheck chk = check_pfaffian_square(p, xs[i]);
      const std::string item = "member[" + std::to_string(i) + "]";
      out.push_back(make_record("pfaffian", t, base + " item=" + item, outcome_of(chk.passed),
                                to_string(chk.lhs), to_string(chk.rhs),
                                {{"item", item}, {"identity", "det(x) = N+(x)^2"}}, start));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) pairs.emplace_back(i, j);
    if (pairs.empty()) pairs.emplace_back(0, 0);
    for (const auto& [i, j] : pairs) {
      start = Clock::now();
      const MultiplicativityCheck chk = check_norm_multiplicativity(p, xs[i], xs[j]);
      const bool degenerate = chk.norm_x * chk.norm_y == 0;
      const bool ok = chk.det_identity &&
                      (degenerate ? chk.norm_xy == 0 : Rational(chk.sign) == expected_sign);
      const std::string item = "product[" + std::to_string(i) + "," + std::to_string(j) + "]";
      out.push_back(make_record(
          "pfaffian", t, base + " item=" + item, outcome_of(ok), to_string(chk.norm_xy),
          to_string(Rational(chk.norm_x * chk.norm_y)),
          {{"item", item},
           {"identity", "N+(xy) = sign * N+(x) N+(y)"},
           {"det_identity", chk.det_identity},
           {"sign", chk.sign},
           {"expected_sign", expected_sign.get_num().get_si()}},
          start));
    }
    return out;
  });
}

std::vector<ReportRecord> run_kron(const RunConfig& c, const PairDescriptor& p) {
  return for_each_trial(c.trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(c.seed, "kron_det", t);
    Rng rng(seed);
    const std::size_t r = 1 + t % 2;
    std::vector<RMatrix> ts;
    for (std::size_t i = 0; i < c.d; ++i) {
      RMatrix m(r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) m(a, b) = rng.rational(c.bound);
      ts.push_back(std::move(m));
    }
    const auto inv = KroneckerDetInvariant::make(r, std::move(ts));
    const RMatrix fresh = sample_g0(p, rng, c.bound);
    const Trial trial = sample_trial(p, c.d, derive_seed(seed, "tuple", t), c.bound);
    const auto start = Clock::now();
    const KronCheck chk = check_kron_det(trial, inv, fresh);
    const std::string text = to_text(inv);
    return std::vector<ReportRecord>{make_record(
        "kron_det", t, describe(p, c.d, seed) + " invariant=" + text, outcome_of(chk.passed),
        to_string(chk.original), to_string(chk.conjugated),
        {{"invariant", text}, {"restricted", to_string(chk.restricted)}}, start)};
  });
}

std::vector<ReportRecord> run_generation(const RunConfig& c, const PairDescriptor& p) {
  const std::size_t samples =
      c.generation_samples ? c.generation_samples : recommended_samples(p, c.d, c.max_degree);
  const std::uint64_t seed = derive_seed(c.seed, "generation", 0);
  const auto start = Clock::now();
  const auto reports = generation_check(p, c.d, c.max_degree, samples, seed);
  const std::int64_t total = micros_since(start);
  std::vector<ReportRecord> out;
  for (const auto& rep : reports) {
    const Outcome o = rep.status == GenerationStatus::Equal          ? Outcome::Pass
                      : rep.status == GenerationStatus::Inconclusive ? Outcome::Inconclusive
                                                                     : Outcome::Fail;
    ReportRecord rec = make_record(
        "generation", rep.degree,
        describe(p, c.d, seed) + " degree=" + std::to_string(rep.degree) +
            " samples=" + std::to_string(samples),
        o, rep.dim_spanned, rep.dim_invariants,
        {{"degree", rep.degree},
         {"status", to_string(rep.status)},
         {"products", rep.products},
         {"samples", rep.samples}},
        start);
    rec.elapsed_us = total / static_cast<std::int64_t>(reports.size());
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::string_view to_string(CheckKind c) {
  switch (c) {
    case CheckKind::Restriction: return "restriction";
    case CheckKind::Charpoly: return "charpoly";
    case CheckKind::BlockCharpoly: return "block_charpoly";
    case CheckKind::Weyl: return "weyl";
    case CheckKind::Pfaffian: return "pfaffian";
    case CheckKind::KronDet: return "kron_det";
    case CheckKind::Generation: return "generation";
  }
  return "?";
}

CheckKind parse_check_kind(std::string_view name) {
  for (CheckKind c : kAllChecks)
    if (to_string(c) == name) return c;
  throw UsageError("unknown check '" + std::string(name) + "'");
}

std::vector<CheckKind> applicable_checks(const PairDescriptor& p) {
  std::vector<CheckKind> out{CheckKind::Restriction};
  if (p.kind() == PairKind::AI || p.kind() == PairKind::AII) out.push_back(CheckKind::Charpoly);
  if (p.is_block_kind()) out.push_back(CheckKind::BlockCharpoly);
  out.push_back(CheckKind::Weyl);
  if (p.kind() == PairKind::AII) out.push_back(CheckKind::Pfaffian);
  if (p.kind() == PairKind::BDI && p.n() == p.m()) out.push_back(CheckKind::KronDet);
  out.push_back(CheckKind::Generation);
  return out;
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string_view value = trim(raw_value);
  try {
    if (key == "pair") {
      c.pair = parse_pair_kind(value);
    } else if (key == "n") {
      c.n = parse_number<std::size_t>(key, value);
    } else if (key == "m") {
      c.m = parse_number<std::size_t>(key, value);
    } else if (key == "d") {
      c.d = parse_number<std::size_t>(key, value);
    } else if (key == "trials") {
      c.trials = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "max-degree") {
      c.max_degree = parse_number<unsigned>(key, value);
    } else if (key == "max-word-length") {
      c.max_word_length = parse_number<unsigned>(key, value);
    } else if (key == "bound") {
      c.bound = parse_number<unsigned>(key, value);
    } else if (key == "checks") {
      c.checks.clear();
      std::size_t start = 0;
      while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string_view part = trim(value.substr(start, comma - start));
        if (part == "all") {
          c.checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
        } else if (!part.empty()) {
          c.checks.push_back(parse_check_kind(part));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else if (key == "output" || key == "out") {
      c.output = std::string(value);
    } else if (key == "allow-even-m") {
      c.allow_even_m = parse_bool(key, value);
    } else if (key == "samples") {
      c.generation_samples = parse_number<std::size_t>(key, value);
    } else if (key == "threads") {
      c.threads = parse_number<unsigned>(key, value);
    } else {
      throw UsageError("unknown setting '" + std::string(raw_key) + "'");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

std::vector<std::string> validate_config(const RunConfig& c) {
  std::vector<std::string> warnings;
  PairDescriptor p = [&] {
    try {
      return c.descriptor();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  if (c.checks.empty()) throw UsageError("no checks selected");
  if (c.bound < 1) throw UsageError("coefficient bound must be at least 1");
  if (c.threads < 1) throw UsageError("threads must be at least 1");
  const auto ok = applicable_checks(p);
  for (CheckKind k : c.checks) {
    if (std::find(ok.begin(), ok.end(), k) == ok.end())
      throw UsageError("check '" + std::string(to_string(k)) + "' does not apply to " + p.label());
    if (k == CheckKind::Generation && p.kind() == PairKind::BDI && p.m() % 2 == 0) {
      const std::string msg = "BDI generation claims assume m odd, got m = " + std::to_string(p.m());
      if (!c.allow_even_m) throw UsageError(msg + " (pass --allow-even-m to run anyway)");
      warnings.push_back(msg);
    }
  }
  return warnings;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

ReportSummary Report::summary() const {
  ReportSummary s;
  for (const auto& r : records) {
    switch (r.outcome) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail: ++s.fail; break;
      case Outcome::Inconclusive: ++s.inconclusive; break;
    }
  }
  s.total = records.size();
  return s;
}

Report run(const RunConfig& config) {
  validate_config(config);
  const auto start = Clock::now();
  const PairDescriptor p = config.descriptor();
  Report report{config, {}, 0};

  std::vector<TraceWord> words;
  if (config.d > 0)
    words = enumerate_trace_words(p.kind(), config.d, config.max_degree, config.max_word_length);

  for (CheckKind k : kAllChecks) {
    if (std::find(config.checks.begin(), config.checks.end(), k) == config.checks.end()) continue;
    std::vector<ReportRecord> recs;
    switch (k) {
      case CheckKind::Restriction: recs = run_restriction(config, p, words); break;
      case CheckKind::Charpoly:
      case CheckKind::BlockCharpoly: recs = run_poly(config, p, words, k); break;
      case CheckKind::Weyl: recs = run_weyl(config, p, words); break;
      case CheckKind::Pfaffian: recs = run_pfaffian(config, p); break;
      case CheckKind::KronDet: recs = run_kron(config, p); break;
      case CheckKind::Generation: recs = run_generation(config, p); break;
    }
    for (auto& r : recs) report.records.push_back(std::move(r));
  }
  report.elapsed_us = micros_since(start);
  return report;
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["pair"] = std::string(to_string(c.pair));
  j["n"] = c.n;
  j["m"] = c.m;
  j["d"] = c.d;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["max_degree"] = c.max_degree;
  j["max_word_length"] = c.max_word_length;
  j["bound"] = c.bound;
  std::vector<std::string> checks;
  for (CheckKind k : c.checks) checks.emplace_back(to_string(k));
  j["checks"] = checks;
  j["allow_even_m"] = c.allow_even_m;
  j["samples"] = c.generation_samples;
  j["threads"] = c.threads;
  j["output"] = c.output;
  return j;
}

nlohmann::ordered_json record_to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["trial"] = r.trial;
  j["input"] = r.input;
  j["digest"] = r.digest;
  j["outcome"] = std::string(to_string(r.outcome));
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["detail"] = r.detail;
  j["elapsed_us"] = r.elapsed_us;
  return j;
}

nlohmann::ordered_json summary_to_json(const Report& r) {
  const ReportSummary s = r.summary();
  nlohmann::ordered_json j;
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive},
                  {"total", s.total}};
  j["config"] = config_to_json(r.config);
  j["warnings"] = validate_config(r.config);
  j["elapsed_us"] = r.elapsed_us;
  return j;
}

void write_report(const Report& r, std::ostream& out) {
  for (const auto& rec : r.records) out << record_to_json(rec).dump() << '\n';
  out << summary_to_json(r).dump() << '\n';
}

void emit_report(const Report& r, const std::string& path) {
  if (path.empty() || path == "-") {
    write_report(r, std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing report to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open report file '" + path + "'");
  write_report(r, out);
  out.flush();
  if (!out) throw IoError("failed writing report file '" + path + "'");
}

int exit_status(const Report& r) { return r.summary().fail > 0 ? 1 : 0; }

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sympair
