#include "morphic/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "morphic/classifier.hpp"
#include "morphic/corpus.hpp"
#include "morphic/errors.hpp"
#include "morphic/qz.hpp"
#include "morphic/ring_expr.hpp"
#include "morphic/verifier.hpp"

namespace morphic {
namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

std::vector<std::string> labels_of(const FiniteRing* ring, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (Element e : elems) out.push_back(ring ? ring->label(e) : std::to_string(e));
  return out;
}

std::string joined(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

void print_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const Row& row) {
    std::string s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        s += row[c];
      } else {
        s += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

Json record(const std::string& expression, const std::string& predicate, const std::string& status,
            std::vector<std::string> witness) {
  Json j;
  j["expression"] = expression;
  j["predicate"] = predicate;
  j["status"] = status;
  j["witness"] = std::move(witness);
  return j;
}

Json report_json(const VerificationReport& r, const FiniteRing* ring) {
  Json j = record(r.expression, r.theorem, verdict_name(r.status), labels_of(ring, r.witness));
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["vacuous"] = r.vacuous;
  j["facts"] = r.facts;
  j["failures"] = r.failures;
  return j;
}

std::string first_note(const VerificationReport& r) {
  if (!r.failures.empty()) return r.failures.front();
  if (!r.facts.empty()) return r.facts.front();
  return {};
}

std::string ms_text(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms << " ms";
  return s.str();
}

void print_reports(std::ostream& out, const std::vector<VerificationReport>& reports) {
  std::vector<Row> rows;
  for (const auto& r : reports) {
    rows.push_back({r.theorem, verdict_name(r.status), std::to_string(r.checked),
                    std::to_string(r.skipped), std::to_string(r.vacuous), ms_text(r.elapsed_ms),
                    first_note(r)});
  }
  print_table(out, {"theorem", "status", "checked", "skipped", "vacuous", "time", "note"}, rows);
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) {
      out << "  " << r.theorem << ": " << r.failures[i] << '\n';
    }
    if (r.failures.size() > 10) {
      out << "  " << r.theorem << ": ... " << r.failures.size() - 10 << " more\n";
    }
  }
}

struct Settings {
  bool json = false;
  std::size_t threads = 1;
  std::string expression;
  std::string theorem;
  std::size_t nmax = 2;
  std::size_t max_order = 0;
  bool suites = false;
  std::int64_t bound = 0;
};

int cmd_classify(const Settings& s, std::ostream& out) {
  const RingAnalysis analysis(build_ring(s.expression, ring_order_cap()));
  ClassifyOptions opts;
  opts.threads = s.threads;
  opts.lattice_cap = ideal_lattice_cap();
  const ClassProfile profile = classify(analysis, opts);
  const FiniteRing& ring = analysis.ring();
  if (s.json) {
    for (const auto& [name, flag] : profile.flags) {
      Json j = record(profile.expression, name, status_name(flag.status),
                      labels_of(&ring, flag.witness));
      if (!flag.note.empty()) j["note"] = flag.note;
      out << j.dump() << '\n';
    }
    return kExitOk;
  }
  out << profile.expression << "  order " << profile.order << '\n';
  std::vector<Row> rows;
  for (const auto& [name, flag] : profile.flags) {
    rows.push_back({name, status_name(flag.status), joined(labels_of(&ring, flag.witness)),
                    flag.note});
  }
  print_table(out, {"predicate", "status", "witness", "note"}, rows);
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const RingAnalysis analysis(build_ring(s.expression, ring_order_cap()));
  VerifyOptions opts;
  opts.threads = s.threads;
  opts.lattice_cap = ideal_lattice_cap();
  opts.nmax = s.nmax;
  std::vector<std::string> ids = theorem_ids();
  if (!s.theorem.empty()) {
    if (std::find(ids.begin(), ids.end(), s.theorem) == ids.end()) {
      throw std::invalid_argument("unknown theorem id '" + s.theorem + "'");
    }
    ids = {s.theorem};
  }
  std::vector<VerificationReport> reports;
  for (const auto& id : ids) reports.push_back(run_theorem(id, analysis, opts));
  bool refuted = false;
  for (const auto& r : reports) refuted = refuted || r.status == Verdict::Refuted;
  if (s.json) {
    for (const auto& r : reports) out << report_json(r, &analysis.ring()).dump() << '\n';
  } else {
    out << analysis.ring().construction() << "  order " << analysis.ring().order() << '\n';
    print_reports(out, reports);
  }
  return refuted ? kExitRefuted : kExitOk;
}

int cmd_corpus(const Settings& s, std::ostream& out) {
  bool bad = false;
  std::map<std::string, ClassProfile> profiles;
  std::map<std::string, RingAnalysis> analyses;
  ClassifyOptions copts;
  copts.threads = s.threads;
  copts.lattice_cap = ideal_lattice_cap();
  std::vector<Row> rows;
  for (const auto& ex : worked_examples()) {
    if (!analyses.count(ex.expression)) {
      auto [it, _] = analyses.emplace(ex.expression, build_ring(ex.expression, ring_order_cap()));
      profiles.emplace(ex.expression, classify(it->second, copts));
    }
    const Flag& flag = profiles.at(ex.expression).flag(ex.predicate);
    const FiniteRing& ring = analyses.at(ex.expression).ring();
    const bool match = flag.status == ex.expected;
    bad = bad || !match;
    if (s.json) {
      Json j = record(ex.expression, ex.predicate, status_name(flag.status),
                      labels_of(&ring, flag.witness));
      j["expected"] = status_name(ex.expected);
      j["match"] = match;
      j["claim"] = ex.claim;
      out << j.dump() << '\n';
    } else {
      rows.push_back({ex.expression, ex.predicate, status_name(ex.expected),
                      status_name(flag.status), match ? "ok" : "MISMATCH",
                      joined(labels_of(&ring, flag.witness))});
    }
  }
  if (!s.json) {
    print_table(out, {"expression", "predicate", "expected", "actual", "diff", "witness"}, rows);
  }

  const VerificationReport t2 = verify_t2_example();
  bad = bad || t2.status == Verdict::Refuted;
  if (s.json) {
    out << report_json(t2, nullptr).dump() << '\n';
  } else {
    out << '\n' << t2.theorem << ": " << verdict_name(t2.status) << '\n';
    for (const auto& f : t2.facts) out << "  " << f << '\n';
    for (const auto& f : t2.failures) out << "  FAIL " << f << '\n';
  }

  if (!s.suites) return bad ? kExitRefuted : kExitOk;

  VerifyOptions vopts;
  vopts.threads = s.threads;
  vopts.lattice_cap = ideal_lattice_cap();
  vopts.nmax = s.nmax;
  const std::vector<std::string> corpus = default_corpus(s.max_order);
  std::map<std::string, std::map<Verdict, std::size_t>> tally;
  std::vector<std::string> failures;
  for (const auto& text : corpus) {
    const RingAnalysis analysis(build_ring(text, std::max(s.max_order, ring_order_cap())));
    for (const auto& id : theorem_ids()) {
      const VerificationReport r = run_theorem(id, analysis, vopts);
      ++tally[id][r.status];
      if (r.status == Verdict::Refuted) {
        bad = true;
        failures.push_back(text + " " + id + ": " + r.failures.front());
      }
      if (s.json) out << report_json(r, &analysis.ring()).dump() << '\n';
    }
  }
  if (!s.json) {
    out << '\n' << corpus.size() << " corpus rings up to order " << s.max_order << ", fingerprint "
        << corpus_fingerprint(corpus) << '\n';
    std::vector<Row> trows;
    for (const auto& id : theorem_ids()) {
      auto& t = tally[id];
      trows.push_back({id, std::to_string(t[Verdict::Verified]), std::to_string(t[Verdict::Refuted]),
                       std::to_string(t[Verdict::Vacuous]),
                       std::to_string(t[Verdict::Indeterminate])});
    }
    print_table(out, {"theorem", "verified", "refuted", "vacuous", "indeterminate"}, trows);
    for (const auto& f : failures) out << "  " << f << '\n';
  }
  return bad ? kExitRefuted : kExitOk;
}

int cmd_search(const Settings& s, std::ostream& out) {
  const std::vector<std::string> corpus = default_corpus(s.max_order);
  const SearchReport rep = search_counterexample(corpus, s.max_order, s.threads);
  std::vector<Json> hits;
  std::vector<Row> rows;
  for (const auto& h : rep.hits) {
    const FiniteRing ring = build_ring(h.expression, s.max_order);
    const std::string pred = std::string(side_name(h.side)) + "_pseudo_not_quasi";
    Json j = record(h.expression, pred, "true", {ring.label(h.element)});
    j["revalidated"] = h.revalidated;
    hits.push_back(std::move(j));
    rows.push_back({h.expression, pred, ring.label(h.element), h.revalidated ? "yes" : "no"});
  }
  const char* status = rep.hits.empty() ? verdict_name(Verdict::Verified)
                                        : verdict_name(Verdict::Refuted);
  if (s.json) {
    for (const auto& j : hits) out << j.dump() << '\n';
    Json summary = record("corpus", "search", status, {});
    summary["rings"] = rep.rings;
    summary["fingerprint"] = rep.fingerprint;
    summary["hits"] = rep.hits.size();
    summary["skipped"] = rep.skipped;
    out << summary.dump() << '\n';
  } else {
    out << "searched " << rep.rings << " rings up to order " << s.max_order << " in "
        << ms_text(rep.elapsed_ms) << ", fingerprint " << rep.fingerprint << '\n';
    out << "skipped " << rep.skipped.size() << ", hits " << rep.hits.size() << ": " << status << '\n';
    if (!rows.empty()) print_table(out, {"expression", "predicate", "witness", "revalidated"}, rows);
  }
  return rep.hits.empty() ? kExitOk : kExitRefuted;
}

int cmd_qz(const Settings& s, std::ostream& out) {
  const VerificationReport r = qz::verify_qz_suite(s.bound);
  if (s.json) {
    out << report_json(r, nullptr).dump() << '\n';
  } else {
    out << r.expression << '\n';
    print_reports(out, {r});
    for (const auto& f : r.facts) out << "  " << f << '\n';
  }
  return r.status == Verdict::Refuted ? kExitRefuted : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Classify finite rings by morphic-type properties and check theorems on them",
               "morphic"};
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "one JSON record per line");

  auto* classify = app.add_subcommand("classify", "print every predicate of a ring");
  classify->add_option("expr", s.expression, "ring expression")->required();
  classify->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run theorem suites on a ring");
  verify->add_option("expr", s.expression, "ring expression")->required();
  verify->add_option("--theorem", s.theorem, "one suite id");
  verify->add_option("--nmax", s.nmax, "largest truncation length")->check(CLI::Range(2, 8));
  verify->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);

  s.max_order = 64;
  auto* corpus = app.add_subcommand("corpus", "diff the worked examples against expectations");
  corpus->add_option("--max-order", s.max_order, "largest ring order for --suites")
      ->check(CLI::PositiveNumber);
  corpus->add_flag("--suites", s.suites, "also run every suite on the default corpus");
  corpus->add_option("--nmax", s.nmax, "largest truncation length")->check(CLI::Range(2, 8));
  corpus->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);

  std::size_t search_order = 512;
  auto* search = app.add_subcommand("search", "look for pseudo-morphic rings that are not quasi-morphic");
  search->add_option("--max-order", search_order, "largest ring order")->check(CLI::PositiveNumber);
  search->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* qzc = app.add_subcommand("qz", "check Z x Q/Z formulas against brute force");
  qzc->add_option("--bound", s.bound, "denominator and integer bound")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));

  for (auto* sub : {classify, verify, corpus, search, qzc}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(s, out);
    if (verify->parsed()) return cmd_verify(s, out);
    if (corpus->parsed()) return cmd_corpus(s, out);
    if (search->parsed()) {
      s.max_order = search_order;
      return cmd_search(s, out);
    }
    return cmd_qz(s, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace morphic
