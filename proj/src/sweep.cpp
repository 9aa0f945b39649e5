#include "scherk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <thread>

#include "scherk/errors.hpp"

namespace scherk {

namespace {

struct NodeOutcome {
  std::optional<CurvatureReport> report;
  std::optional<std::string> error;
};

NodeOutcome evaluate(const ScherkParams& params, bool r_filter) {
  NodeOutcome out;
  if (r_filter && !in_region_R(params)) return out;
  try {
    out.report = curvature_at_zero(params);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<NodeOutcome> evaluate_all(const std::vector<ScherkParams>& nodes, bool r_filter,
                                      int threads) {
  std::vector<NodeOutcome> out(nodes.size());
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  n = std::clamp(n, 1u, 64u);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < nodes.size(); i = next++) {
      out[i] = evaluate(nodes[i], r_filter);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

void absorb(const std::vector<ScherkParams>& nodes, std::vector<NodeOutcome>& outcomes,
            std::vector<CurvatureReport>& rows, SweepResult& result) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.error) {
      result.failures.push_back({nodes[i], *o.error});
      continue;
    }
    if (!o.report) continue;
    const CurvatureReport& r = *o.report;
    if (!invariant_failures(r).empty()) ++result.violations;
    const double absK = std::abs(r.K);
    if (absK > result.max_absK) {
      result.max_absK = absK;
      result.argmax = {r.p, r.q};
    }
    rows.push_back(r);
  }
}

}  // namespace

SweepResult sweep_region(const SweepSpec& spec) {
  if (spec.p_steps < 8 || spec.q_steps < 8) {
    throw DomainError("sweep needs at least 8 steps per axis");
  }
  std::vector<ScherkParams> nodes;
  for (int i = 1; i < spec.p_steps; ++i) {
    const double p = kPi * (static_cast<double>(i) / spec.p_steps);
    for (int j = 1; j < spec.q_steps; ++j) {
      const double q = kTwoPi * (static_cast<double>(j) / spec.q_steps);
      nodes.push_back({p, q});
    }
  }

  SweepResult result;
  auto outcomes = evaluate_all(nodes, spec.r_filter, spec.threads);
  absorb(nodes, outcomes, result.rows, result);

  if (spec.refine && !result.rows.empty()) {
    double wp = kPi / spec.p_steps;
    double wq = kTwoPi / spec.q_steps;
    for (int round = 0; round < 3; ++round) {
      const ScherkParams center = result.argmax;
      std::vector<ScherkParams> local;
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          local.push_back({center.p + wp * (-1.0 + 2.0 * i / 9.0),
                           center.q + wq * (-1.0 + 2.0 * j / 9.0)});
        }
      }
      auto local_out = evaluate_all(local, true, spec.threads);
      absorb(local, local_out, result.refinement_rows, result);
      wp /= 4.0;
      wq /= 4.0;
    }
  }
  return result;
}

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  // Collapse negative zero so tiny negative values do not print as "-0.0...".
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

void write_row(const CurvatureReport& r, std::ostream& out) {
  out << fixed12(r.p) << ',' << fixed12(r.q) << ',' << fixed12(r.beta) << ','
      << fixed12(r.alpha) << ',' << fixed12(r.z_zero.real()) << ','
      << fixed12(r.z_zero.imag()) << ',' << fixed12(r.a.real()) << ','
      << fixed12(r.a.imag()) << ',' << fixed12(std::abs(r.K)) << ','
      << fixed12(r.bound_margin) << ',' << fixed12(r.re_za) << ',' << to_string(r.label)
      << '\n';
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "p,q,beta,alpha,re_zzero,im_zzero,re_a,im_a,absK,bound_margin,re_za,case\n";
  for (const auto& r : result.rows) write_row(r, out);
  for (const auto& r : result.refinement_rows) write_row(r, out);
}

void export_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(result, file);
  file.flush();
  if (!file) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace scherk
