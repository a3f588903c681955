#include "syz/lift.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>

namespace syz {

LiftAlgorithm parse_lift_algorithm(std::string_view name) {
  if (name == "schreyer")
    return LiftAlgorithm::schreyer;
  if (name == "reduce")
    return LiftAlgorithm::reduce;
  if (name == "hybrid")
    return LiftAlgorithm::hybrid;
  if (name == "tree")
    return LiftAlgorithm::tree;
  throw std::invalid_argument("unknown lifting algorithm '" + std::string(name) + "'");
}

std::string lift_algorithm_name(LiftAlgorithm alg) {
  switch (alg) {
  case LiftAlgorithm::schreyer:
    return "schreyer";
  case LiftAlgorithm::reduce:
    return "reduce";
  case LiftAlgorithm::hybrid:
    return "hybrid";
  case LiftAlgorithm::tree:
    return "tree";
  }
  return "?";
}

std::optional<ModuleVector> SubtreeCache::find(const ModuleMonomial& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end())
    return std::nullopt;
  return it->second;
}

ModuleVector SubtreeCache::insert(const ModuleMonomial& key, ModuleVector value) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = map_.try_emplace(key, std::move(value));
  return it->second;
}

std::size_t SubtreeCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

std::vector<std::pair<ModuleMonomial, ModuleVector>> SubtreeCache::entries() const {
  std::shared_lock lock(mutex_);
  return {map_.begin(), map_.end()};
}

LiftContext::LiftContext(const PrimeField& field, const OrderingChain& chain, std::size_t level,
                         std::span<const ModuleVector> generators)
    : field_(&field), chain_(&chain), level_(level), gens_(generators.begin(), generators.end()) {
  if (chain.depth() <= level)
    throw std::invalid_argument("LiftContext: ordering chain too short for the syzygy level");
  if (chain.rank(level + 1) != gens_.size())
    throw std::invalid_argument("LiftContext: chain level does not match the generators");
  leading_.reserve(gens_.size());
  for (std::uint32_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].is_zero())
      throw std::invalid_argument("LiftContext: zero generator");
    const ModuleMonomial lm = gens_[i].terms.front().monomial();
    leading_.push_back(lm);
    if (lm.comp >= by_comp_.size())
      by_comp_.resize(lm.comp + 1);
    by_comp_[lm.comp].push_back(i);
  }
}

std::optional<std::uint32_t> LiftContext::divisor(const ModuleMonomial& t, std::uint32_t from) const {
  if (t.comp >= by_comp_.size())
    return std::nullopt;
  for (std::uint32_t i : by_comp_[t.comp])
    if (i >= from && leading_[i].mono.divides(t.mono))
      return i;
  return std::nullopt;
}

const ModuleVector& LiftContext::sorted_generator(std::size_t i) const {
  std::call_once(sorted_once_, [this] {
    sorted_ = gens_;
    for (auto& g : sorted_)
      normalize(g, *chain_, level_);
  });
  return sorted_[i];
}

ModuleVector LiftContext::psi(const ModuleVector& v, StatCounters& counters) const {
  ModuleVector acc;
  for (const Term& t : v.terms) {
    if (t.comp >= gens_.size())
      throw std::out_of_range("psi: component out of range");
    ModuleVector part = term_times_vector({t.coeff, t.mono}, sorted_generator(t.comp), *field_,
                                          counters);
    acc = vector_add(acc, part, *chain_, level_, *field_, counters);
  }
  return acc;
}

std::pair<ModuleVector, ModuleVector> LiftContext::split_lot(const ModuleVector& g) const {
  std::pair<ModuleVector, ModuleVector> out;
  for (const Term& t : g.terms)
    (is_lower_order(t.monomial()) ? out.second : out.first).terms.push_back(t);
  return out;
}

ModuleVector lot(const ModuleVector& g, const LiftContext& ctx) { return ctx.split_lot(g).second; }

namespace {

using TermMap = std::unordered_map<ModuleMonomial, Coeff, ModuleMonomialHash>;

void accumulate(TermMap& acc, const ModuleMonomial& m, Coeff c, const PrimeField& field,
                StatCounters& counters) {
  auto [it, fresh] = acc.try_emplace(m, c);
  if (fresh)
    return;
  it->second = field.add(it->second, c);
  counters.count_add(it->second == 0);
  if (it->second == 0)
    acc.erase(it);
}

/// head followed by the other entries of `rest` in canonical order.
ModuleVector assemble(const Term& head, TermMap& rest) {
  ModuleVector out;
  out.terms.reserve(rest.size() + 1);
  out.terms.push_back(head);
  std::vector<Term> tail;
  tail.reserve(rest.size());
  for (const auto& [m, c] : rest)
    if (!(m == head.monomial()))
      tail.push_back({c, m.mono, m.comp});
  canonical_sort(tail);
  out.terms.insert(out.terms.end(), tail.begin(), tail.end());
  return out;
}

/// The divisor used for monomial t of psi(s): smallest index, and when t is the
/// leading monomial of psi(s) the first index with s > m e_i.
std::uint32_t admissible_divisor(const ModuleMonomial& t, const ModuleMonomial& s,
                                 const ModuleMonomial& head, const LiftContext& ctx,
                                 StatCounters& counters) {
  std::uint32_t from = 0;
  while (auto k = ctx.divisor(t, from)) {
    if (!(t == head))
      return *k;
    const ModuleMonomial cand{t.mono / ctx.leading(*k).mono, *k};
    if (ctx.chain().compare(ctx.level() + 1, s, cand, &counters) > 0)
      return *k;
    from = *k + 1;
  }
  throw std::logic_error("lift: no admissible divisor; the term is not a leading syzygy");
}

/// g - q m f for sorted g and sorted f whose leading products cancel: both
/// heads are skipped.
std::vector<Term> sub_scaled_tail(std::span<const Term> g, Coeff q, const Monomial& m,
                                  const ModuleVector& f, const LiftContext& ctx,
                                  StatCounters& counters) {
  const PrimeField& field = ctx.field();
  const Coeff mq = field.neg(q);
  std::vector<Term> out;
  out.reserve(g.size() + f.terms.size());
  auto a = g.begin() + 1;
  auto b = f.terms.begin() + 1;
  auto product = [&](const Term& u) {
    ++counters.n_mult;
    return Term{field.mul(mq, u.coeff), m * u.mono, u.comp};
  };
  while (a != g.end() && b != f.terms.end()) {
    const ModuleMonomial bm{m * b->mono, b->comp};
    auto c = ctx.chain().compare(ctx.level(), a->monomial(), bm, &counters);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(product(*b++));
    } else {
      Term p = product(*b++);
      Coeff s = field.add(a->coeff, p.coeff);
      counters.count_add(s == 0);
      if (s != 0)
        out.push_back({s, p.mono, p.comp});
      ++a;
    }
  }
  out.insert(out.end(), a, g.end());
  for (; b != f.terms.end(); ++b)
    out.push_back(product(*b));
  return out;
}

/// Reduces sorted g to zero by leading-term reduction, recording -q m e_k in syz.
void reduce_to_zero(std::vector<Term> g, const ModuleMonomial& s, const ModuleMonomial& head,
                    const LiftContext& ctx, TermMap& syz, StatCounters& counters) {
  const PrimeField& field = ctx.field();
  while (!g.empty()) {
    const Term lt = g.front();
    const std::uint32_t k = admissible_divisor(lt.monomial(), s, head, ctx, counters);
    const ModuleVector& f = ctx.sorted_generator(k);
    const Coeff q = field.div(lt.coeff, f.terms.front().coeff);
    const Monomial m = lt.mono / f.terms.front().mono;
    accumulate(syz, {m, k}, field.neg(q), field, counters);
    g = sub_scaled_tail(g, q, m, f, ctx, counters);
  }
}

void check_frame_term(const ModuleMonomial& s, const LiftContext& ctx) {
  if (s.comp >= ctx.size())
    throw std::invalid_argument("lift: frame term component out of range");
}

} // namespace

ModuleVector lift_reduce(const ModuleMonomial& s, const LiftContext& ctx, StatCounters& counters) {
  check_frame_term(s, ctx);
  const ModuleVector& f = ctx.sorted_generator(s.comp);
  ModuleVector g = term_times_vector({1, s.mono}, f, ctx.field(), counters);
  const ModuleMonomial head = g.terms.front().monomial();
  TermMap syz;
  reduce_to_zero(std::move(g.terms), s, head, ctx, syz, counters);
  return assemble({1, s.mono, s.comp}, syz);
}

ModuleVector lift_hybrid(const ModuleMonomial& s, const LiftContext& ctx, StatCounters& counters) {
  check_frame_term(s, ctx);
  const PrimeField& field = ctx.field();
  struct Entry {
    Coeff coeff;
    std::uint64_t seq;
    std::uint32_t divisor;
  };
  std::unordered_map<ModuleMonomial, Entry, ModuleMonomialHash> g;
  std::deque<std::pair<ModuleMonomial, std::uint64_t>> queue;
  std::uint64_t seq = 0;

  // Adds c t to g unless t is a lower order term.
  auto add = [&](const ModuleMonomial& t, Coeff c) {
    auto it = g.find(t);
    if (it != g.end()) {
      it->second.coeff = field.add(it->second.coeff, c);
      counters.count_add(it->second.coeff == 0);
      if (it->second.coeff == 0)
        g.erase(it);
      return true;
    }
    auto k = ctx.divisor(t);
    if (!k)
      return false;
    g.emplace(t, Entry{c, seq, *k});
    queue.emplace_back(t, seq++);
    return true;
  };

  const ModuleVector& fs = ctx.generator(s.comp);
  const ModuleMonomial head{s.mono * fs.terms.front().mono, fs.terms.front().comp};
  for (const Term& u : fs.terms) {
    const ModuleMonomial t{s.mono * u.mono, u.comp};
    if (ctx.divisor(t)) {
      ++counters.n_mult;
      add(t, u.coeff);
    }
  }

  TermMap syz;
  while (!queue.empty()) {
    auto [t, tseq] = queue.front();
    queue.pop_front();
    auto it = g.find(t);
    if (it == g.end() || it->second.seq != tseq)
      continue;
    const Coeff c = it->second.coeff;
    std::uint32_t k = it->second.divisor;
    if (t == head)
      k = admissible_divisor(t, s, head, ctx, counters);
    g.erase(it);
    const ModuleVector& f = ctx.generator(k);
    const Coeff q = field.div(c, f.terms.front().coeff);
    const Monomial m = t.mono / f.terms.front().mono;
    accumulate(syz, {m, k}, field.neg(q), field, counters);
    const Coeff mq = field.neg(q);
    for (std::size_t idx = 1; idx < f.terms.size(); ++idx) {
      const Term& u = f.terms[idx];
      const ModuleMonomial tu{m * u.mono, u.comp};
      if (g.contains(tu) || ctx.divisor(tu)) {
        ++counters.n_mult;
        add(tu, field.mul(mq, u.coeff));
      }
    }
  }
  return assemble({1, s.mono, s.comp}, syz);
}

namespace {

struct Child {
  Coeff coeff;
  ModuleMonomial key;
};

/// Keys to subtract for the terms of c * m * f_i, skipping the head when
/// `skip_head` is set. The root passes s for the admissibility check.
std::vector<Child> children_of(const ModuleMonomial& node, bool skip_head,
                               const ModuleMonomial* root, const LiftContext& ctx,
                               StatCounters& counters) {
  const PrimeField& field = ctx.field();
  const ModuleVector& f = ctx.generator(node.comp);
  const ModuleMonomial head{node.mono * f.terms.front().mono, f.terms.front().comp};
  std::vector<Child> out;
  for (std::size_t idx = skip_head ? 1 : 0; idx < f.terms.size(); ++idx) {
    const Term& u = f.terms[idx];
    const ModuleMonomial t{node.mono * u.mono, u.comp};
    std::optional<std::uint32_t> k;
    if (root && t == head)
      k = admissible_divisor(t, *root, head, ctx, counters);
    else
      k = ctx.divisor(t);
    if (!k)
      continue;
    const Term& lk = ctx.generator(*k).terms.front();
    out.push_back({field.div(u.coeff, lk.coeff), {t.mono / lk.mono, *k}});
  }
  return out;
}

struct Frame {
  ModuleMonomial key;
  std::vector<Child> children;
  std::size_t next = 0;
  TermMap acc;
};

void subtract_scaled(TermMap& acc, Coeff c, const ModuleVector& value, const PrimeField& field,
                     StatCounters& counters) {
  const Coeff mc = field.neg(c);
  for (const Term& t : value.terms) {
    ++counters.n_mult;
    accumulate(acc, t.monomial(), field.mul(mc, t.coeff), field, counters);
  }
}

/// Value of the subtree lifting of `key` (coefficient 1). Post-order walk
/// with an explicit stack; every finished node is cached.
ModuleVector subtree_value(const ModuleMonomial& key, const LiftContext& ctx, SubtreeCache& cache,
                           StatCounters& counters) {
  if (auto hit = cache.find(key)) {
    cache.count_hit();
    return *hit;
  }
  const PrimeField& field = ctx.field();
  std::vector<Frame> stack;
  cache.count_expansion();
  stack.push_back({key, children_of(key, true, nullptr, ctx, counters), 0, {}});
  ModuleVector finished;
  while (true) {
    Frame& top = stack.back();
    if (top.next < top.children.size()) {
      const Child child = top.children[top.next];
      if (auto hit = cache.find(child.key)) {
        cache.count_hit();
        subtract_scaled(top.acc, child.coeff, *hit, field, counters);
        ++top.next;
      } else {
        cache.count_expansion();
        stack.push_back({child.key, children_of(child.key, true, nullptr, ctx, counters), 0, {}});
      }
      continue;
    }
    accumulate(top.acc, top.key, 1, field, counters);
    finished = cache.insert(top.key, assemble({1, top.key.mono, top.key.comp}, top.acc));
    stack.pop_back();
    if (stack.empty())
      return finished;
    Frame& parent = stack.back();
    subtract_scaled(parent.acc, parent.children[parent.next].coeff, finished, field, counters);
    ++parent.next;
  }
}

} // namespace

ModuleVector lift_subtree(const Term& t, const LiftContext& ctx, SubtreeCache& cache,
                          StatCounters& counters) {
  if (t.coeff == 0)
    throw std::invalid_argument("lift_subtree: zero term");
  check_frame_term(t.monomial(), ctx);
  ModuleVector v = subtree_value(t.monomial(), ctx, cache, counters);
  if (t.coeff == 1)
    return v;
  return term_times_vector({t.coeff, Monomial{}}, v, ctx.field(), counters);
}

ModuleVector lift_tree(const ModuleMonomial& s, const LiftContext& ctx, SubtreeCache& cache,
                       StatCounters& counters) {
  check_frame_term(s, ctx);
  TermMap acc;
  for (const Child& child : children_of(s, false, &s, ctx, counters)) {
    ModuleVector value = subtree_value(child.key, ctx, cache, counters);
    subtract_scaled(acc, child.coeff, value, ctx.field(), counters);
  }
  accumulate(acc, s, 1, ctx.field(), counters);
  return assemble({1, s.mono, s.comp}, acc);
}

std::vector<ModuleVector> syz_schreyer(const LiftContext& ctx, StatCounters& counters) {
  const PrimeField& field = ctx.field();
  auto leading = ctx.leading_monomials();
  std::vector<std::vector<std::uint32_t>> by_comp;
  for (std::uint32_t i = 0; i < leading.size(); ++i) {
    if (leading[i].comp >= by_comp.size())
      by_comp.resize(leading[i].comp + 1);
    by_comp[leading[i].comp].push_back(i);
  }
  struct Pair {
    std::uint32_t i;
    std::uint32_t j;
    Monomial cofactor;
  };
  std::vector<Pair> pairs;
  for (std::uint32_t i = 0; i < leading.size(); ++i) {
    // Minimal generators of the colon module M_i, each with its first source j.
    std::vector<Pair> minimal;
    for (std::uint32_t j : by_comp[leading[i].comp]) {
      if (j >= i)
        break;
      const Monomial t = lcm(leading[i].mono, leading[j].mono) / leading[i].mono;
      if (std::any_of(minimal.begin(), minimal.end(),
                      [&](const Pair& p) { return p.cofactor.divides(t); }))
        continue;
      std::erase_if(minimal, [&](const Pair& p) { return t.divides(p.cofactor); });
      minimal.push_back({i, j, t});
    }
    std::stable_sort(minimal.begin(), minimal.end(), [&](const Pair& a, const Pair& b) {
      return cmp_base(a.cofactor, b.cofactor, ctx.chain().base()) > 0;
    });
    pairs.insert(pairs.end(), minimal.begin(), minimal.end());
  }

  std::vector<ModuleVector> out;
  out.reserve(pairs.size());
  for (const Pair& p : pairs) {
    const ModuleVector& fi = ctx.sorted_generator(p.i);
    const ModuleVector& fj = ctx.sorted_generator(p.j);
    const Coeff ci = fi.terms.front().coeff;
    const Coeff cj = fj.terms.front().coeff;
    const Monomial mj = lcm(leading[p.i].mono, leading[p.j].mono) / leading[p.j].mono;
    // S = (t / c_i) f_i - (mj / c_j) f_j, scaled by c_i so the syzygy is monic.
    ModuleVector left = term_times_vector({1, p.cofactor}, fi, field, counters);
    const Coeff q = field.div(ci, cj);
    std::vector<Term> s = sub_scaled_tail(left.terms, q, mj, fj, ctx, counters);
    TermMap syz;
    accumulate(syz, {mj, p.j}, field.neg(q), field, counters);
    const ModuleMonomial head = left.terms.front().monomial();
    const ModuleMonomial frame_term{p.cofactor, p.i};
    reduce_to_zero(std::move(s), frame_term, head, ctx, syz, counters);
    out.push_back(assemble({1, p.cofactor, p.i}, syz));
  }
  return out;
}

std::vector<ModuleVector> syz_lift(const LiftContext& ctx, std::span<const ModuleMonomial> frame,
                                   LiftAlgorithm alg, StatCounters& counters, unsigned threads,
                                   SubtreeCache* cache) {
  if (alg == LiftAlgorithm::schreyer) {
    std::vector<ModuleVector> found = syz_schreyer(ctx, counters);
    std::unordered_map<ModuleMonomial, std::size_t, ModuleMonomialHash> index;
    for (std::size_t i = 0; i < found.size(); ++i)
      index.emplace(found[i].terms.front().monomial(), i);
    if (index.size() != frame.size())
      throw std::logic_error("syz_lift: Schreyer syzygies do not match the frame");
    std::vector<ModuleVector> out;
    out.reserve(frame.size());
    for (const ModuleMonomial& s : frame) {
      auto it = index.find(s);
      if (it == index.end())
        throw std::logic_error("syz_lift: frame term missing from Schreyer syzygies");
      out.push_back(std::move(found[it->second]));
    }
    return out;
  }

  SubtreeCache local;
  SubtreeCache& tree_cache = cache ? *cache : local;
  std::vector<ModuleVector> out(frame.size());
  auto lift_one = [&](std::size_t i, StatCounters& ctr) {
    switch (alg) {
    case LiftAlgorithm::reduce:
      out[i] = lift_reduce(frame[i], ctx, ctr);
      break;
    case LiftAlgorithm::hybrid:
      out[i] = lift_hybrid(frame[i], ctx, ctr);
      break;
    default:
      out[i] = lift_tree(frame[i], ctx, tree_cache, ctr);
      break;
    }
  };

  if (threads <= 1 || frame.size() < 2) {
    for (std::size_t i = 0; i < frame.size(); ++i)
      lift_one(i, counters);
    return out;
  }

  std::atomic<std::size_t> next{0};
  const unsigned n = std::min<std::size_t>(threads, frame.size());
  std::vector<StatCounters> per_thread(n);
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < frame.size();)
            lift_one(i, per_thread[t]);
        } catch (...) {
          errors[t] = std::current_exception();
          next = frame.size();
        }
      });
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  for (const auto& c : per_thread)
    counters += c;
  return out;
}

} // namespace syz
