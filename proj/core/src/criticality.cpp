#include "cascade/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace cascade {

namespace {

using Clock = std::chrono::steady_clock;

GenusOptions genus_opts(const ClassifyOptions& opt, Clock::time_point deadline) {
  GenusOptions g;
  g.cache = opt.cache;
  g.want_witness = false;
  if (opt.timeout_ms > 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - Clock::now())
                    .count();
    if (left <= 0) throw TimeoutError("classification budget exhausted");
    g.timeout_ms = static_cast<int>(left);
  } else {
    g.timeout_ms = 0;
  }
  return g;
}

int eval(const LabeledGraph& g, ParameterId p, const ClassifyOptions& opt,
         Clock::time_point deadline) {
  GenusOptions go = genus_opts(opt, deadline);
  return p == ParameterId::EulerGenus ? euler_genus(g, go).genus
                                      : euler_genus_plus(g, go).genus;
}

// Decision form: is the parameter value at most `cap`? Avoids pinning down
// values above the threshold.
bool eval_le(const LabeledGraph& g, ParameterId p, int cap,
             const ClassifyOptions& opt, Clock::time_point deadline) {
  GenusOptions go = genus_opts(opt, deadline);
  go.genus_cap = cap;
  int v = p == ParameterId::EulerGenus ? euler_genus(g, go).genus
                                       : euler_genus_plus(g, go).genus;
  return v <= cap;
}

// Evaluates fn(i) for i in [0, count) on opt.workers threads; exceptions are
// rethrown on the caller.
void parallel_for(int count, int workers,
                  const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int parameter_value(const LabeledGraph& g, ParameterId p,
                    const ClassifyOptions& opt) {
  auto deadline = Clock::now() + std::chrono::milliseconds(opt.timeout_ms);
  return eval(g, p, opt, deadline);
}

std::vector<MinorOp> decreasers(const LabeledGraph& g, ParameterId p, int k,
                                const ClassifyOptions& opt) {
  auto deadline = Clock::now() + std::chrono::milliseconds(opt.timeout_ms);
  int base = eval(g, p, opt, deadline);
  std::vector<MinorOp> ops = minor_ops(g);
  std::vector<char> hit(ops.size(), 0);
  parallel_for(static_cast<int>(ops.size()), opt.workers, [&](int i) {
    LabeledGraph h = apply_minor_op(g, ops[i]);
    hit[i] = eval_le(h, p, base - k, opt, deadline);
  });
  std::vector<MinorOp> out;
  for (size_t i = 0; i < ops.size(); ++i)
    if (hit[i]) out.push_back(ops[i]);
  return out;
}

bool is_parameter_critical(const LabeledGraph& g, ParameterId p,
                           const ClassifyOptions& opt) {
  return decreasers(g, p, 1, opt).size() == minor_ops(g).size();
}

CriticalityReport classify(const LabeledGraph& g, const ClassifyOptions& opt) {
  auto deadline = Clock::now() + std::chrono::milliseconds(opt.timeout_ms);
  CriticalityReport rep;
  bool terminals = g.has_terminals();
  rep.genus = eval(g.underlying(), ParameterId::EulerGenus, opt, deadline);
  if (terminals)
    rep.genus_plus = eval(g, ParameterId::EulerGenusPlus, opt, deadline);

  std::vector<MinorOp> ops = minor_ops(g);
  rep.ops.assign(ops.size(), {});
  std::atomic<bool> c1_dead{false};
  parallel_for(static_cast<int>(ops.size()), opt.workers, [&](int i) {
    if (opt.cascade_only_fast && c1_dead.load(std::memory_order_relaxed))
      return;
    OpRecord rec;
    rec.op = ops[i];
    LabeledGraph h = apply_minor_op(g, ops[i]);
    // Minor operations never increase either parameter, so capping at the
    // base value still yields exact child values.
    {
      GenusOptions go = genus_opts(opt, deadline);
      go.genus_cap = rep.genus - 1;
      rec.genus = std::min(euler_genus(h.underlying(), go).genus, rep.genus);
      rec.dec_genus = rec.genus <= rep.genus - 1;
    }
    if (terminals) {
      GenusOptions go = genus_opts(opt, deadline);
      go.genus_cap = rep.genus_plus - 1;
      rec.genus_plus = std::min(euler_genus_plus(h, go).genus, rep.genus_plus);
      rec.dec_genus_plus = rec.genus_plus <= rep.genus_plus - 1;
      if (!rec.dec_genus && !rec.dec_genus_plus)
        c1_dead.store(true, std::memory_order_relaxed);
    }
    rep.ops[i] = rec;
  });
  if (opt.cascade_only_fast && c1_dead.load()) {
    rep.c1 = false;
    rep.is_cascade = false;
    rep.in_s1 = false;
    return rep;
  }

  if (terminals) {
    rep.c1 = true;
    rep.c2 = rep.c3 = false;
    for (const OpRecord& rec : rep.ops) {
      if (!rec.dec_genus && !rec.dec_genus_plus) {
        rep.c1 = false;
        rep.c1_violations.push_back(rec.op);
      }
      if (!rec.dec_genus && !rep.c2) {
        rep.c2 = true;
        rep.c2_witness = rec.op;
      }
      if (!rec.dec_genus_plus && !rep.c3) {
        rep.c3 = true;
        rep.c3_witness = rec.op;
      }
    }
    bool edgeless_pair = g.terminals_nonadjacent();
    rep.is_cascade = edgeless_pair && rep.c1 && rep.c2 && rep.c3;
    rep.in_s1 = rep.is_cascade && rep.genus_plus == 2;
    rep.in_c_circ_plus = edgeless_pair;
    for (const OpRecord& rec : rep.ops)
      if (!rec.dec_genus_plus) rep.in_c_circ_plus = false;
  }

  // Criticality of the underlying terminal-free graph: the full operation
  // set there includes the terminal-pair contraction.
  if (opt.underlying_flags) {
    LabeledGraph under = g.underlying();
    std::vector<MinorOp> uops = minor_ops(under);
    std::vector<char> dec(uops.size(), 0);
    parallel_for(static_cast<int>(uops.size()), opt.workers, [&](int i) {
      LabeledGraph h = apply_minor_op(under, uops[i]);
      dec[i] =
          eval_le(h, ParameterId::EulerGenus, rep.genus - 1, opt, deadline);
    });
    rep.in_e_k = rep.genus >= 1;
    rep.in_e_star_k = rep.genus >= 1;
    for (size_t i = 0; i < uops.size(); ++i) {
      if (!dec[i]) {
        rep.in_e_k = false;
        if (uops[i].kind == MinorOp::Delete) rep.in_e_star_k = false;
      }
    }
    for (int v = 0; v < under.vertex_count() && rep.in_e_star_k; ++v)
      if (under.degree(v) < 3) rep.in_e_star_k = false;
  }
  return rep;
}

}  // namespace cascade
