/* Copyright 2026 The Parakeet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "parakeet/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "parakeet/instantiation.h"
#include "parakeet/merge.h"
#include "parakeet/proof_io.h"

namespace parakeet {

namespace {

bool original_ext(const Problem& problem, const RunOptions& options) {
  switch (options.ext) {
    case ExtMode::kOn:
      return true;
    case ExtMode::kOff:
      return false;
    case ExtMode::kAuto:
      break;
  }
  return problem.options.ext.value_or(false);
}

struct Attempt {
  RunReport report;
  EncodedProblem encoded;
  std::optional<Proof> proof;
};

Attempt attempt(const Problem& problem, const RunOptions& options) {
  Attempt a;
  a.report.used_ext = original_ext(problem, options);
  try {
    a.encoded = encode(problem, options);
    ProverLimits limits = options.limits;
    limits.use_ext = a.report.used_ext;
    ProverOutcome out = prove(a.encoded.inputs(), limits);
    a.report.outcome = std::string(outcome_name(out));
    a.report.stats = stats_of(out);
    if (auto* r = std::get_if<Refutation>(&out)) {
      a.report.proof_text = format_listing(r->proof);
      a.report.steps_before = count_steps(r->proof);
      a.proof = std::move(r->proof);
    }
  } catch (const std::exception& e) {
    a.report.outcome = "error";
    a.report.error = e.what();
  }
  return a;
}

void sort_bindings(Instantiation& inst, const std::vector<std::string>& order) {
  auto rank = [&](const std::string& v) {
    auto it = std::find(order.begin(), order.end(), v);
    return std::make_pair(it - order.begin(), v);
  };
  std::stable_sort(inst.bindings.begin(), inst.bindings.end(),
                   [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
}

const FactDecl* find_fact(const Problem& problem, const std::string& name) {
  for (const FactDecl& f : problem.facts) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

void instantiate(const Problem& problem, const RunOptions& options, Attempt& a) {
  RunReport& r = a.report;
  r.instantiated = true;
  DecodeContext ctx{&a.encoded.info, options.undefined.value_or(problem.options.undefined)};
  std::vector<Instantiation> decoded;
  try {
    for (const RawInstantiation& raw : filter_fact_uses(infer(*a.proof), a.encoded.table)) {
      const FactDecl* fact = find_fact(problem, raw.fact);
      std::vector<std::string> order = fact ? fact->free_vars : std::vector<std::string>{};
      DecodedInstantiation d = decode_instantiation(raw, order, ctx);
      decoded.push_back(std::move(d.inst));
      r.decode_errors.insert(r.decode_errors.end(), d.errors.begin(), d.errors.end());
    }
  } catch (const UnknownAxiomError& e) {
    r.decode_errors.push_back(e.what());
  }
  r.instantiations = merge_all(decoded);
  std::map<std::string, int> groups;
  bool informative = false;
  for (Instantiation& inst : r.instantiations) {
    if (const FactDecl* fact = find_fact(problem, inst.fact)) sort_bindings(inst, fact->free_vars);
    informative |= !inst.empty() || ++groups[inst.fact] > 1;
  }
  if (informative) {
    for (const Instantiation& inst : r.instantiations) {
      r.suggestions.push_back(to_string(inst, problem.style));
    }
  }
  try {
    Proof t = transform(*a.proof);
    r.transform_ok = check_proof(t).ok();
    r.subst_free = count_rule<rules::Subst>(t.root) == 0;
    r.steps_after = count_steps(t);
  } catch (const std::exception& e) {
    r.transform_error = e.what();
  }
}

}  // namespace

int exit_code(const RunReport& report) {
  if (report.outcome == "refutation") return 0;
  if (report.outcome == "saturated") return 1;
  if (report.outcome == "resource-out") return 2;
  return 3;
}

EncodedProblem encode(const Problem& problem, const RunOptions& options) {
  return encode_problem(problem, options.lambda.value_or(problem.options.lambda_mode));
}

RunReport run_prove(const Problem& problem, const RunOptions& options) {
  return attempt(problem, options).report;
}

RunReport run_instantiate(const Problem& problem, const RunOptions& options) {
  Attempt a = attempt(problem, options);
  if (a.proof) instantiate(problem, options, a);
  return std::move(a.report);
}

Problem instantiate_problem(const Problem& problem,
                            const std::vector<Instantiation>& insts) {
  Problem out = problem;
  out.facts.clear();
  for (const FactDecl& fact : problem.facts) {
    bool used = false;
    for (const Instantiation& inst : insts) {
      if (inst.fact != fact.name) continue;
      used = true;
      FactDecl d = fact;
      d.formula = normalize_terms(substitute(fact.formula, inst.as_subst()));
      d.free_vars = free_vars(d.formula);
      out.facts.push_back(std::move(d));
    }
    if (!used) out.facts.push_back(fact);
  }
  return out;
}

RunReport run_replay(const Problem& problem, const RunOptions& options) {
  Attempt a = attempt(problem, options);
  if (!a.proof) return std::move(a.report);
  instantiate(problem, options, a);
  RunReport& r = a.report;
  r.replayed = true;
  try {
    Problem replay = instantiate_problem(problem, r.instantiations);
    std::vector<InputClause> inputs = encode(replay, options).inputs();
    ProverLimits limits = options.limits;
    limits.max_seconds =
        std::max(options.replay_factor * r.stats.elapsed, options.replay_min_seconds);
    for (bool ext : {false, true}) {
      if (ext && options.ext == ExtMode::kOff) break;
      limits.use_ext = ext;
      ProverOutcome out = prove(inputs, limits);
      ++r.replay_rounds;
      r.replay_outcome = std::string(outcome_name(out));
      r.replay_stats = stats_of(out);
      r.replay_generated_total += r.replay_stats.generated;
      r.replay_used_ext = ext;
      if (std::holds_alternative<Refutation>(out)) break;
    }
  } catch (const std::exception& e) {
    r.replay_outcome = "error";
    r.error = e.what();
  }
  return std::move(r);
}

std::vector<RunReport> run_bench(const std::filesystem::path& dir,
                                 const RunOptions& options, unsigned jobs) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".prob" || ext == ".p") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunReport> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      RunReport r;
      try {
        r = run_replay(parse_problem_file(files[i]), options);
      } catch (const std::exception& e) {
        r.outcome = "error";
        r.error = e.what();
      }
      r.file = files[i].filename().string();
      reports[i] = std::move(r);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return reports;
}

BenchSummary summarize(const std::vector<RunReport>& reports) {
  BenchSummary s;
  std::vector<double> reductions;
  for (const RunReport& r : reports) {
    ++s.problems;
    if (r.outcome != "refutation") continue;
    ++s.refuted;
    s.transformed += r.transform_ok;
    s.subst_free += r.transform_ok && r.subst_free;
    if (r.replay_outcome == "refutation") ++s.replay_refuted;
    if (r.replay_outcome == "refutation" && r.replay_generated_total <= r.stats.generated) {
      ++s.replay_not_worse;
    }
    if (r.stats.generated > 0) {
      reductions.push_back(1.0 - static_cast<double>(r.replay_generated_total) /
                                     static_cast<double>(r.stats.generated));
    } else {
      reductions.push_back(r.replay_generated_total == 0 ? 0.0 : -1.0);
    }
  }
  if (!reductions.empty()) {
    std::sort(reductions.begin(), reductions.end());
    std::size_t n = reductions.size();
    s.median_reduction = n % 2 ? reductions[n / 2]
                               : (reductions[n / 2 - 1] + reductions[n / 2]) / 2.0;
  }
  return s;
}

namespace {

nlohmann::json stats_json(const SearchStats& s) {
  return {{"generated", s.generated}, {"kept", s.kept}, {"elapsed", s.elapsed}};
}

nlohmann::json report_json(const RunReport& r) {
  nlohmann::json j;
  if (!r.file.empty()) j["file"] = r.file;
  j["outcome"] = r.outcome;
  if (!r.error.empty()) j["error"] = r.error;
  j["ext"] = r.used_ext;
  j["stats"] = stats_json(r.stats);
  if (!r.proof_text.empty()) j["proof"] = r.proof_text;
  if (r.instantiated) {
    j["suggestions"] = r.suggestions;
    j["decode_errors"] = r.decode_errors;
    j["steps"] = {{"before", r.steps_before}, {"after", r.steps_after}};
    j["transform_ok"] = r.transform_ok;
    j["subst_free"] = r.subst_free;
    if (!r.transform_error.empty()) j["transform_error"] = r.transform_error;
  }
  if (r.replayed) {
    j["replay"] = {{"outcome", r.replay_outcome},
                   {"stats", stats_json(r.replay_stats)},
                   {"generated_total", r.replay_generated_total},
                   {"rounds", r.replay_rounds},
                   {"ext", r.replay_used_ext}};
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << s;
  return out.str();
}

const char* kCsvHeader =
    "file,outcome,generated,kept,elapsed,steps_before,steps_after,transform_ok,"
    "subst_free,suggestions,replay_outcome,replay_generated,replay_elapsed,"
    "replay_rounds,replay_ext\n";

std::string csv_row(const RunReport& r) {
  std::ostringstream out;
  out << csv_field(r.file) << ',' << r.outcome << ',' << r.stats.generated << ','
      << r.stats.kept << ',' << seconds(r.stats.elapsed) << ',' << r.steps_before << ','
      << r.steps_after << ',' << r.transform_ok << ',' << r.subst_free << ','
      << r.suggestions.size() << ',' << r.replay_outcome << ','
      << r.replay_generated_total << ',' << seconds(r.replay_stats.elapsed) << ','
      << r.replay_rounds << ',' << r.replay_used_ext << '\n';
  return out.str();
}

std::string percent(std::size_t n, std::size_t d) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << (d ? 100.0 * n / d : 0.0) << '%';
  return out.str();
}

}  // namespace

std::string format_report(const RunReport& r, OutputFormat format) {
  if (format == OutputFormat::kJson) return report_json(r).dump(2) + "\n";
  if (format == OutputFormat::kCsv) return kCsvHeader + csv_row(r);
  std::ostringstream out;
  out << "outcome: " << r.outcome << '\n';
  if (!r.error.empty()) out << "error: " << r.error << '\n';
  if (r.outcome == "error") return out.str();
  out << "generated " << r.stats.generated << ", kept " << r.stats.kept << ", "
      << seconds(r.stats.elapsed) << "s" << (r.used_ext ? ", with ext" : "") << '\n';
  if (!r.proof_text.empty() && !r.instantiated) out << r.proof_text;
  if (r.instantiated) {
    if (r.suggestions.empty()) {
      out << "no instantiations to suggest\n";
    } else {
      out << "suggestions:\n";
      for (const std::string& s : r.suggestions) out << "  " << s << '\n';
    }
    for (const std::string& e : r.decode_errors) out << "decode error: " << e << '\n';
    if (r.transform_ok) {
      out << "steps: " << r.steps_before << " -> " << r.steps_after
          << (r.subst_free ? " (Subst-free, checked)" : " (checked)") << '\n';
    } else {
      out << "transform failed: " << r.transform_error << '\n';
    }
  }
  if (r.replayed) {
    out << "replay: " << r.replay_outcome << ", generated " << r.stats.generated << " -> "
        << r.replay_generated_total << ", " << seconds(r.stats.elapsed) << "s -> "
        << seconds(r.replay_stats.elapsed) << "s";
    if (r.replay_rounds > 1) out << " (" << r.replay_rounds << " rounds)";
    if (r.replay_used_ext) out << ", with ext";
    out << '\n';
  }
  return out.str();
}

std::string format_bench(const std::vector<RunReport>& reports, OutputFormat format) {
  BenchSummary s = summarize(reports);
  if (format == OutputFormat::kJson) {
    nlohmann::json j;
    j["problems"] = nlohmann::json::array();
    for (const RunReport& r : reports) j["problems"].push_back(report_json(r));
    j["summary"] = {{"problems", s.problems},
                    {"refuted", s.refuted},
                    {"transformed", s.transformed},
                    {"subst_free", s.subst_free},
                    {"replay_refuted", s.replay_refuted},
                    {"replay_not_worse", s.replay_not_worse},
                    {"median_reduction", s.median_reduction}};
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kCsv) {
    std::string out = kCsvHeader;
    for (const RunReport& r : reports) out += csv_row(r);
    return out;
  }
  std::size_t width = 4;
  for (const RunReport& r : reports) width = std::max(width, r.file.size());
  std::ostringstream out;
  out << std::left << std::setw(width) << "file" << "  " << std::setw(12) << "outcome"
      << std::right << std::setw(9) << "gen" << std::setw(8) << "steps" << std::setw(8)
      << "after" << "  " << std::left << std::setw(12) << "replay" << std::right
      << std::setw(9) << "gen" << '\n';
  for (const RunReport& r : reports) {
    out << std::left << std::setw(width) << r.file << "  " << std::setw(12) << r.outcome
        << std::right << std::setw(9) << r.stats.generated << std::setw(8) << r.steps_before
        << std::setw(8) << r.steps_after << "  " << std::left << std::setw(12)
        << (r.replayed ? r.replay_outcome : "-") << std::right << std::setw(9)
        << r.replay_generated_total << '\n';
  }
  out << "refuted " << s.refuted << "/" << s.problems << " ("
      << percent(s.refuted, s.problems) << "), transform ok "
      << percent(s.transformed, s.refuted) << ", Subst-free " << percent(s.subst_free, s.refuted)
      << ", replay not worse " << percent(s.replay_not_worse, s.refuted)
      << ", median generated-clause reduction " << std::fixed << std::setprecision(1)
      << 100.0 * s.median_reduction << "%\n";
  return out.str();
}

}  // namespace parakeet
