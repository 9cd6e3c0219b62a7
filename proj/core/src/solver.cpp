#include "bex/solver.hpp"

#include <algorithm>
#include <utility>

namespace bex {

namespace {

bool is_tight(const SplitRepresentation& rep, ElementSet f, int constraint_index) {
  const HyperedgeConstraint& c = rep.constraints[static_cast<std::size_t>(constraint_index)];
  return (f & c.elements).size() == c.bound;
}

}  // namespace

std::string Relabeling::tag() const {
  if (!side_swap && !swap_h1_h3 && !swap_h2_h4) return "identity";
  std::string out;
  if (side_swap) out += "side";
  if (swap_h1_h3) out += out.empty() ? "h1h3" : "+h1h3";
  if (swap_h2_h4) out += out.empty() ? "h2h4" : "+h2h4";
  return out;
}

MonotoneState::MonotoneState(SplitRepresentation rep, BasisPairInstance instance, SolveStats* stats)
    : rep_(std::move(rep)), instance_(instance), stats_(stats) {
  const int r = rep_.rank;
  for (ElementSet s : {instance_.a1, instance_.a2, instance_.b1, instance_.b2}) {
    if (s.size() != r || !rep_is_independent(rep_, s)) {
      throw InputError("monotone state requires four bases of the representation");
    }
  }
  if (!compatible(instance_)) throw InputError("monotone state requires compatible pairs");
  a1_cur_ = instance_.a1;
  a2_cur_ = instance_.a2;
}

ExchangeSequence MonotoneState::steps() const {
  ExchangeSequence out;
  out.reserve(x_seq_.size());
  for (std::size_t i = 0; i < x_seq_.size(); ++i) out.push_back({x_seq_[i], y_seq_[i]});
  return out;
}

bool MonotoneState::check_independent(ElementSet x) const {
  if (stats_ != nullptr) ++stats_->constraint_checks;
  return rep_is_independent(rep_, x);
}

bool MonotoneState::exchange_valid(int x, int y) const {
  if (!((a1_cur_ - a2_cur_) & instance_.b2).contains(x)) return false;
  if (!((a2_cur_ - a1_cur_) & instance_.b1).contains(y)) return false;
  return check_independent(a1_cur_.without(x).with(y)) &&
         check_independent(a2_cur_.with(x).without(y));
}

void MonotoneState::append(int x, int y) {
  BEX_INTERNAL_CHECK(exchange_valid(x, y), "attempted to append an invalid monotone exchange");
  a1_cur_ = a1_cur_.without(x).with(y);
  a2_cur_ = a2_cur_.with(x).without(y);
  x_seq_.push_back(x);
  y_seq_.push_back(y);
}

bool MonotoneState::satisfies_invariant(const std::vector<int>& xs, const std::vector<int>& ys) const {
  if (xs.size() != ys.size()) return false;
  const ElementSet x_domain = instance_.a1 & instance_.b2;
  const ElementSet y_domain = instance_.a2 & instance_.b1;
  ElementSet x_used, y_used;
  ElementSet cur1 = instance_.a1;
  ElementSet cur2 = instance_.a2;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int x = xs[i];
    const int y = ys[i];
    if (!x_domain.contains(x) || !y_domain.contains(y)) return false;
    if (x_used.contains(x) || y_used.contains(y)) return false;
    x_used = x_used.with(x);
    y_used = y_used.with(y);
    if (!(cur1 - cur2).contains(x) || !(cur2 - cur1).contains(y)) return false;
    cur1 = cur1.without(x).with(y);
    cur2 = cur2.with(x).without(y);
    if (!check_independent(cur1) || !check_independent(cur2)) return false;
  }
  return true;
}

void MonotoneState::set_sequences(std::vector<int> xs, std::vector<int> ys) {
  BEX_INTERNAL_CHECK(satisfies_invariant(xs, ys),
                     "replacement sequences violate the monotone-state invariant");
  x_seq_ = std::move(xs);
  y_seq_ = std::move(ys);
  a1_cur_ = instance_.a1;
  a2_cur_ = instance_.a2;
  for (std::size_t i = 0; i < x_seq_.size(); ++i) {
    a1_cur_ = a1_cur_.without(x_seq_[i]).with(y_seq_[i]);
    a2_cur_ = a2_cur_.with(x_seq_[i]).without(y_seq_[i]);
  }
}

MonotoneState greedy_monotone(MonotoneState state) {
  for (;;) {
    const ElementSet xs = (state.a1_current() - state.a2_current()) & state.instance().b2;
    const ElementSet ys = (state.a2_current() - state.a1_current()) & state.instance().b1;
    bool appended = false;
    for (int x : xs) {
      for (int y : ys) {
        if (state.exchange_valid(x, y)) {
          state.append(x, y);
          appended = true;
          break;
        }
      }
      if (appended) break;
    }
    if (!appended) return state;
  }
}

std::optional<MonotoneState> extend_plus_two(const MonotoneState& state) {
  if (state.finished()) throw InputError("extend_plus_two: state already reaches the target pair");
  const ElementSet fresh_x = (state.a1_current() - state.a2_current()) & state.instance().b2;
  const ElementSet fresh_y = (state.a2_current() - state.a1_current()) & state.instance().b1;
  for (int x : fresh_x) {
    for (int y : fresh_y) {
      if (state.exchange_valid(x, y)) {
        throw InputError("extend_plus_two: state is not maximal, a single exchange is available");
      }
    }
  }

  const int s = state.length();
  const std::vector<int> xs = state.x_seq();
  const std::vector<int> ys = state.y_seq();
  const std::vector<int> xcand = fresh_x.to_vector();
  const std::vector<int> ycand = fresh_y.to_vector();

  std::vector<int> cx, cy;
  // Each template replaces one position with a fresh element and appends two
  // steps; the displaced element is re-issued as the last step.
  const auto try_template = [&](int i, int t, int x, int x2, int y, int y2) -> bool {
    cx = xs;
    cy = ys;
    switch (t) {
      case 0: cx[static_cast<std::size_t>(i)] = x2; cx.push_back(x);  cx.push_back(xs[static_cast<std::size_t>(i)]); cy.push_back(y);  cy.push_back(y2); break;
      case 1: cx[static_cast<std::size_t>(i)] = x;  cx.push_back(x2); cx.push_back(xs[static_cast<std::size_t>(i)]); cy.push_back(y2); cy.push_back(y);  break;
      case 2: cx[static_cast<std::size_t>(i)] = x;  cx.push_back(x2); cx.push_back(xs[static_cast<std::size_t>(i)]); cy.push_back(y);  cy.push_back(y2); break;
      case 3: cx[static_cast<std::size_t>(i)] = x2; cx.push_back(x);  cx.push_back(xs[static_cast<std::size_t>(i)]); cy.push_back(y2); cy.push_back(y);  break;
      case 4: cx.push_back(x2); cx.push_back(x);  cy[static_cast<std::size_t>(i)] = y;  cy.push_back(y2); cy.push_back(ys[static_cast<std::size_t>(i)]); break;
      case 5: cx.push_back(x);  cx.push_back(x2); cy[static_cast<std::size_t>(i)] = y2; cy.push_back(y);  cy.push_back(ys[static_cast<std::size_t>(i)]); break;
      case 6: cx.push_back(x);  cx.push_back(x2); cy[static_cast<std::size_t>(i)] = y;  cy.push_back(y2); cy.push_back(ys[static_cast<std::size_t>(i)]); break;
      default: cx.push_back(x2); cx.push_back(x); cy[static_cast<std::size_t>(i)] = y2; cy.push_back(y);  cy.push_back(ys[static_cast<std::size_t>(i)]); break;
    }
    return state.satisfies_invariant(cx, cy);
  };

  for (int i = 0; i < s; ++i) {
    for (int x : xcand) {
      for (int x2 : xcand) {
        if (x2 == x) continue;
        for (int y : ycand) {
          for (int y2 : ycand) {
            if (y2 == y) continue;
            for (int t = 0; t < 8; ++t) {
              if (try_template(i, t, x, x2, y, y2)) {
                MonotoneState out = state;
                out.set_sequences(cx, cy);
                return out;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

BlockingQuadruple find_blocking_quadruple(const MonotoneState& state) {
  if (state.finished()) throw InputError("find_blocking_quadruple: state already reaches the target");
  const SplitRepresentation& rep = state.rep();
  const ElementSet a1p = state.a1_current();
  const ElementSet a2p = state.a2_current();
  const ElementSet b1 = state.instance().b1;
  const ElementSet b2 = state.instance().b2;

  for (int x : (a1p - a2p) & b2) {
    for (int y : (a2p - a1p) & b1) {
      if (state.exchange_valid(x, y)) {
        throw InputError("find_blocking_quadruple: an exchange is still available");
      }
    }
  }

  // Smallest e in a - b whose removal admits `elem`; guaranteed to exist by
  // the co-exchange axiom.
  const auto co_find = [&](ElementSet a, ElementSet b, int elem) -> int {
    for (int e : a - b) {
      if (state.check_independent(a.without(e).with(elem))) return e;
    }
    throw InternalError("co-exchange search failed; oracle is not a matroid");
  };
  // Smallest constraint index violated by s; -1 when s is independent.
  const auto violated = [&](ElementSet s) -> int {
    for (std::size_t i = 0; i < rep.constraints.size(); ++i) {
      const HyperedgeConstraint& c = rep.constraints[i];
      if ((s & c.elements).size() > c.bound) return static_cast<int>(i);
    }
    return -1;
  };
  const auto edge = [&](int idx) { return rep.constraints[static_cast<std::size_t>(idx)].elements; };

  BEX_INTERNAL_CHECK(!(a1p & b2).empty(), "blocked state has no exchangeable element");
  const int x = (a1p & b2).smallest();
  const int y = co_find(a2p, b2, x);
  const int h1 = violated(a1p.without(x).with(y));
  BEX_INTERNAL_CHECK(h1 >= 0, "first replacement is a basis although the state is blocked");
  BEX_INTERNAL_CHECK(is_tight(rep, a1p, h1) && !edge(h1).contains(x) && edge(h1).contains(y),
                     "first blocking hyperedge has unexpected structure");

  const int x2 = co_find(a1p, b1, y);
  const int h2 = violated(a2p.with(x2).without(y));
  BEX_INTERNAL_CHECK(h2 >= 0, "second replacement is a basis although the state is blocked");
  BEX_INTERNAL_CHECK(is_tight(rep, a2p, h2) && !edge(h2).contains(y) && edge(h2).contains(x2),
                     "second blocking hyperedge has unexpected structure");
  BEX_INTERNAL_CHECK(edge(h1).contains(x2) && !edge(h2).contains(x),
                     "witness memberships contradict the blocking analysis");

  const int y2 = co_find(a2p, b2, x2);
  const int h3 = violated(a1p.without(x2).with(y2));
  BEX_INTERNAL_CHECK(h3 >= 0, "third replacement is a basis although the state is blocked");
  BEX_INTERNAL_CHECK(is_tight(rep, a1p, h3) && !edge(h3).contains(x2) && edge(h3).contains(y2),
                     "third blocking hyperedge has unexpected structure");
  BEX_INTERNAL_CHECK((edge(h1) & edge(h3)).subset_of(a1p) && a1p.subset_of(edge(h1) | edge(h3)),
                     "first set is not sandwiched by its tight hyperedges");
  BEX_INTERNAL_CHECK(edge(h3).contains(x) && !edge(h3).contains(y) && !edge(h1).contains(y2),
                     "witness memberships contradict the blocking analysis");

  const int h4 = violated(a2p.with(x).without(y2));
  BEX_INTERNAL_CHECK(h4 >= 0, "fourth replacement is a basis although the state is blocked");
  BEX_INTERNAL_CHECK(is_tight(rep, a2p, h4) && !edge(h4).contains(y2) && edge(h4).contains(x),
                     "fourth blocking hyperedge has unexpected structure");
  BEX_INTERNAL_CHECK((edge(h2) & edge(h4)).subset_of(a2p) && a2p.subset_of(edge(h2) | edge(h4)),
                     "second set is not sandwiched by its tight hyperedges");
  BEX_INTERNAL_CHECK(edge(h4).contains(y) && !edge(h4).contains(x2) && edge(h2).contains(y2),
                     "witness memberships contradict the blocking analysis");

  BEX_INTERNAL_CHECK(h1 != h2 && h1 != h3 && h1 != h4 && h2 != h3 && h2 != h4 && h3 != h4,
                     "blocking hyperedges are not pairwise distinct");
  return BlockingQuadruple{{h1, h2, h3, h4}, x, x2, y, y2};
}

BlockingCertificate build_certificate(const MonotoneState& state, const BlockingQuadruple& quad) {
  const SplitRepresentation& rep = state.rep();
  const BasisPairInstance& inst = state.instance();
  const ElementSet a1p = state.a1_current();
  const ElementSet a2p = state.a2_current();

  std::array<ElementSet, 4> hs;
  for (int i = 0; i < 4; ++i) {
    hs[static_cast<std::size_t>(i)] =
        rep.constraints[static_cast<std::size_t>(quad.hyperedges[static_cast<std::size_t>(i)])].elements;
  }
  const auto corner = [](const std::array<ElementSet, 4>& h, int a, int b, int c, int d) {
    return (h[static_cast<std::size_t>(a)] & h[static_cast<std::size_t>(b)]) -
           (h[static_cast<std::size_t>(c)] | h[static_cast<std::size_t>(d)]);
  };

  const int d = (a1p - inst.b1).size();
  BEX_INTERNAL_CHECK(d > 0, "certificate requested for a finished state");
  BEX_INTERNAL_CHECK(d % 2 == 0, "blocking distance d must be even");
  const int half = d / 2;

  {
    const ElementSet h12 = corner(hs, 0, 1, 2, 3);
    const ElementSet h34 = corner(hs, 2, 3, 0, 1);
    const ElementSet h14 = corner(hs, 0, 3, 1, 2);
    const ElementSet h23 = corner(hs, 1, 2, 0, 3);
    BEX_INTERNAL_CHECK((a1p & inst.b2).subset_of(h12 | h34) && (a2p & inst.b1).subset_of(h14 | h23),
                       "leftover elements escape the four hyperedge corners");
    BEX_INTERNAL_CHECK((a1p & inst.b2 & h12).size() == half && (a1p & inst.b2 & h34).size() == half &&
                           (a2p & inst.b1 & h14).size() == half && (a2p & inst.b1 & h23).size() == half,
                       "corner classes do not all have size d/2");
  }
  BEX_INTERNAL_CHECK(d <= 2 * (inst.a1 & inst.b1).size(), "d exceeds twice |a1 ∩ b1|");
  for (int k = 0; k < 4; ++k) {
    const ElementSet start = (k == 0 || k == 2) ? inst.a1 : inst.a2;
    const ElementSet target = (k == 0 || k == 2) ? inst.b1 : inst.b2;
    BEX_INTERNAL_CHECK(is_tight(rep, start, quad.hyperedges[static_cast<std::size_t>(k)]) &&
                           is_tight(rep, target, quad.hyperedges[static_cast<std::size_t>(k)]),
                       "start or target set is not tight at a blocking hyperedge");
  }
  {
    const ElementSet d13 = hs[0] ^ hs[2];
    const ElementSet d24 = hs[1] ^ hs[3];
    for (std::size_t i = 0; i < state.x_seq().size(); ++i) {
      const int xi = state.x_seq()[i];
      const int yi = state.y_seq()[i];
      BEX_INTERNAL_CHECK((d13 & d24).contains(xi) && (d13 & d24).contains(yi),
                         "a used exchange pair escapes the symmetric differences");
      for (const ElementSet& h : hs) {
        BEX_INTERNAL_CHECK(h.contains(xi) == h.contains(yi),
                           "a used exchange pair splits across a blocking hyperedge");
      }
    }
  }

  // Normalize by the symmetry group: optionally swap the two sides (which
  // exchanges the tightness roles of (H1,H3) and (H2,H4)) and optionally swap
  // within each pair. Only relabelings that preserve the corner structure are
  // usable; each candidate is checked in full. A first pass insists on a
  // pivot lying in an odd number of the four hyperedges, a second pass
  // accepts any pivot matching one of the two schedule patterns.
  for (int pass = 0; pass < 2; ++pass) {
    for (int side = 0; side < 2; ++side) {
      for (int s13 = 0; s13 < 2; ++s13) {
        for (int s24 = 0; s24 < 2; ++s24) {
          std::array<int, 4> perm = quad.hyperedges;
          if (side != 0) perm = {perm[1], perm[0], perm[3], perm[2]};
          if (s13 != 0) std::swap(perm[0], perm[2]);
          if (s24 != 0) std::swap(perm[1], perm[3]);

          const ElementSet ta1 = side != 0 ? a2p : a1p;
          const ElementSet ta2 = side != 0 ? a1p : a2p;
          const ElementSet tb1 = side != 0 ? inst.b2 : inst.b1;
          const ElementSet tb2 = side != 0 ? inst.b1 : inst.b2;
          std::array<ElementSet, 4> th;
          for (int k = 0; k < 4; ++k) {
            th[static_cast<std::size_t>(k)] =
                rep.constraints[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])].elements;
          }
          if (!is_tight(rep, ta1, perm[0]) || !is_tight(rep, ta1, perm[2]) ||
              !is_tight(rep, ta2, perm[1]) || !is_tight(rep, ta2, perm[3])) {
            continue;
          }
          const ElementSet h12 = corner(th, 0, 1, 2, 3);
          const ElementSet h34 = corner(th, 2, 3, 0, 1);
          const ElementSet h14 = corner(th, 0, 3, 1, 2);
          const ElementSet h23 = corner(th, 1, 2, 0, 3);
          const ElementSet ce = ta1 & tb2 & h12;
          const ElementSet cg = ta1 & tb2 & h34;
          const ElementSet cf = ta2 & tb1 & h14;
          const ElementSet ch = ta2 & tb1 & h23;
          if (ce.size() != half || cg.size() != half || cf.size() != half || ch.size() != half) continue;
          if (!(ta1 & tb2).subset_of(h12 | h34) || !(ta2 & tb1).subset_of(h14 | h23)) continue;

          for (int z : ta1 & tb1) {
            const bool in1 = th[0].contains(z);
            const bool in2 = th[1].contains(z);
            const bool in3 = th[2].contains(z);
            const bool in4 = th[3].contains(z);
            const bool z1_pattern = in1 && !in2 && !in3 && !in4;
            const bool z2_pattern = in1 && in3 && !in2;
            const int members = static_cast<int>(in1) + static_cast<int>(in2) +
                                static_cast<int>(in3) + static_cast<int>(in4);
            const bool odd = members % 2 == 1;
            if (!z1_pattern && !z2_pattern) continue;
            if (pass == 0 && !odd) continue;

            BlockingCertificate cert;
            cert.hyperedges = perm;
            cert.class_e = ce;
            cert.class_f = cf;
            cert.class_g = cg;
            cert.class_h = ch;
            cert.d = d;
            cert.pivot = z;
            cert.pivot_case = z1_pattern ? PivotCase::z1 : PivotCase::z2;
            cert.pivot_odd_membership = odd;
            cert.relabeling = Relabeling{side != 0, s13 != 0, s24 != 0};
            cert.a1_prime = ta1;
            cert.a2_prime = ta2;
            cert.b1_target = tb1;
            cert.b2_target = tb2;
            return cert;
          }
        }
      }
    }
  }
  throw InternalError("no pivot element admits a final schedule");
}

ExchangeSequence final_schedule(const MonotoneState& state, const BlockingCertificate& cert) {
  const SplitRepresentation& rep = state.rep();
  const int half = cert.d / 2;
  const std::vector<int> es = cert.class_e.to_vector();
  const std::vector<int> fs = cert.class_f.to_vector();
  const std::vector<int> gs = cert.class_g.to_vector();
  const std::vector<int> hs = cert.class_h.to_vector();
  BEX_INTERNAL_CHECK(static_cast<int>(es.size()) == half && static_cast<int>(fs.size()) == half &&
                         static_cast<int>(gs.size()) == half && static_cast<int>(hs.size()) == half,
                     "certificate classes do not have size d/2");

  ExchangeSequence plan;
  plan.push_back({cert.pivot, fs[0]});
  for (int i = 0; i < half; ++i) {
    const int closer = i + 1 < half ? fs[static_cast<std::size_t>(i + 1)] : cert.pivot;
    if (cert.pivot_case == PivotCase::z1) {
      plan.push_back({gs[static_cast<std::size_t>(i)], hs[static_cast<std::size_t>(i)]});
      plan.push_back({es[static_cast<std::size_t>(i)], closer});
    } else {
      plan.push_back({es[static_cast<std::size_t>(i)], hs[static_cast<std::size_t>(i)]});
      plan.push_back({gs[static_cast<std::size_t>(i)], closer});
    }
  }
  BEX_INTERNAL_CHECK(static_cast<int>(plan.size()) == cert.d + 1, "final schedule must have d + 1 steps");

  // Replay in normalized coordinates, checking that every intermediate pair
  // consists of bases and follows the expected tightness pattern.
  ElementSet cur1 = cert.a1_prime;
  ElementSet cur2 = cert.a2_prime;
  int k = 0;
  for (const ExchangeStep& step : plan) {
    ++k;
    BEX_INTERNAL_CHECK((cur1 - cur2).contains(step.x) && (cur2 - cur1).contains(step.y),
                       "final schedule step is not a symmetric exchange");
    cur1 = cur1.without(step.x).with(step.y);
    cur2 = cur2.with(step.x).without(step.y);
    BEX_INTERNAL_CHECK(state.check_independent(cur1) && state.check_independent(cur2),
                       "intermediate pair in the final schedule is not a pair of bases");
    if (cert.pivot_case == PivotCase::z1) {
      BEX_INTERNAL_CHECK(is_tight(rep, cur1, cert.hyperedges[0]),
                         "final schedule breaks the first-set tightness pattern");
      BEX_INTERNAL_CHECK(is_tight(rep, cur2, cert.hyperedges[k % 2 == 1 ? 1 : 3]),
                         "final schedule breaks the second-set tightness pattern");
    } else {
      BEX_INTERNAL_CHECK(is_tight(rep, cur1, cert.hyperedges[k % 2 == 1 ? 0 : 2]),
                         "final schedule breaks the first-set tightness pattern");
      BEX_INTERNAL_CHECK(is_tight(rep, cur2, cert.hyperedges[1]),
                         "final schedule breaks the second-set tightness pattern");
    }
  }
  BEX_INTERNAL_CHECK(cur1 == cert.b1_target && cur2 == cert.b2_target,
                     "final schedule does not reach the target pair");

  if (cert.relabeling.side_swap) {
    for (ExchangeStep& step : plan) std::swap(step.x, step.y);
  }
  return plan;
}

namespace {

SplitRepresentation validated_normal_form(const SplitRepresentation& rep) {
  const std::vector<Violation> violations = validate_representation(rep);
  if (!violations.empty()) {
    throw InputError("invalid representation: " + violations.front().message);
  }
  return normalize_nonredundant(rep);
}

}  // namespace

SolveContext::SolveContext(const SplitRepresentation& rep, SolveOptions options)
    : rep_(validated_normal_form(rep)), options_(options), oracle_(rep_oracle(rep_)) {}

const SolveContext::Contracted& SolveContext::contracted(ElementSet t) {
  auto it = cache_.find(t.bits());
  if (it != cache_.end()) return it->second;

  Contracted c;
  c.rep = contract_representation(rep_, t);
  for (std::size_t i = 0, k = 0; i < rep_.constraints.size(); ++i) {
    const HyperedgeConstraint& in = rep_.constraints[i];
    const HyperedgeConstraint updated{in.elements - t, in.bound - (in.elements & t).size()};
    if (k < c.rep.constraints.size() && c.rep.constraints[k] == updated) {
      c.origin.push_back(static_cast<int>(i));
      ++k;
    }
  }
  BEX_INTERNAL_CHECK(c.origin.size() == c.rep.constraints.size(),
                     "contracted constraints do not align with their origins");
  if (c.rep.ground.members.size() <= options_.component_cap) {
    c.components = connected_components(rep_oracle(c.rep), options_.component_cap);
    c.decomposed = true;
    for (const ElementSet& comp : c.components) {
      const int comp_rank = rep_rank(c.rep, comp);
      bool uniform = true;
      for (const HyperedgeConstraint& cc : c.rep.constraints) {
        const ElementSet restricted = cc.elements & comp;
        if (cc.bound < comp_rank && restricted.size() > cc.bound) {
          uniform = false;
          break;
        }
      }
      c.component_uniform.push_back(uniform);
      if (!uniform) {
        BEX_INTERNAL_CHECK(c.nonuniform_index < 0,
                           "more than one non-uniform component in a valid representation");
        c.nonuniform_index = static_cast<int>(c.component_uniform.size()) - 1;
      }
    }
  }
  return cache_.emplace(t.bits(), std::move(c)).first->second;
}

SolveResult SolveContext::solve(const BasisPairInstance& p) { return solve_impl(p); }

SolveResult SolveContext::solve_impl(const BasisPairInstance& p) {
  const int r = rep_.rank;
  const char* names[] = {"a1", "a2", "b1", "b2"};
  const ElementSet sets[] = {p.a1, p.a2, p.b1, p.b2};
  for (int i = 0; i < 4; ++i) {
    if (!rep_.ground.contains(sets[i])) {
      throw InputError(std::string(names[i]) + " leaves the ground set");
    }
    if (sets[i].size() != r || !rep_is_independent(rep_, sets[i])) {
      throw InputError(std::string(names[i]) + " is not a basis");
    }
  }
  if (!compatible(p)) {
    throw InfeasibleError("basis pairs are incompatible: no exchange sequence exists");
  }

  const int lower_bound = r - (p.a1 & p.b1).size();
  const ElementSet t = p.a1 & p.a2;
  const Contracted& ct = contracted(t);
  const BasisPairInstance pc{p.a1 - t, p.a2 - t, p.b1 - t, p.b2 - t};

  SolveResult result;
  MonotoneState state(ct.rep, pc, &result.stats);

  if (ct.decomposed) {
    // Uniform components admit every pairing; match the leftover elements in
    // ascending order. The remaining work, if any, lives in the single
    // non-uniform component.
    for (std::size_t ci = 0; ci < ct.components.size(); ++ci) {
      if (!ct.component_uniform[ci]) continue;
      const ElementSet comp = ct.components[ci];
      const std::vector<int> xs = (pc.a1 & pc.b2 & comp).to_vector();
      const std::vector<int> ys = (pc.a2 & pc.b1 & comp).to_vector();
      BEX_INTERNAL_CHECK(xs.size() == ys.size(), "unbalanced surplus inside a component");
      for (std::size_t k = 0; k < xs.size(); ++k) state.append(xs[k], ys[k]);
    }
  }

  state = greedy_monotone(std::move(state));
  int rounds = 0;
  while (!state.finished()) {
    std::optional<MonotoneState> extended = extend_plus_two(state);
    if (!extended.has_value()) break;
    BEX_INTERNAL_CHECK(++rounds <= r, "extension loop exceeded its iteration cap");
    result.stats.extend_rounds = rounds;
    state = greedy_monotone(std::move(*extended));
  }

  ExchangeSequence sequence = state.steps();
  if (!state.finished()) {
    result.stats.blocked_path = true;
    const BlockingQuadruple quad = find_blocking_quadruple(state);
    result.certificate = build_certificate(state, quad);
    const ExchangeSequence tail = final_schedule(state, *result.certificate);
    sequence.insert(sequence.end(), tail.begin(), tail.end());
    // Certificate indices are local to the contracted representation; report
    // them against the normalized input list instead.
    for (int& h : result.certificate->hyperedges) h = ct.origin[static_cast<std::size_t>(h)];
  }

  result.lower_bound = lower_bound;
  result.monotone_length = state.length();
  result.distance = static_cast<int>(sequence.size());
  result.sequence = std::move(sequence);

  BEX_INTERNAL_CHECK(verify_sequence(oracle_, p, result.sequence),
                     "solver produced a sequence that fails verification");
  BEX_INTERNAL_CHECK(result.distance == lower_bound + (result.stats.blocked_path ? 1 : 0),
                     "distance classifier disagrees with the produced sequence");
  BEX_INTERNAL_CHECK(result.distance <= std::min(r, lower_bound + 1),
                     "distance exceeds min(rank, lower_bound + 1)");
  BEX_INTERNAL_CHECK(result.certificate.has_value() == (result.distance == lower_bound + 1),
                     "certificate must be attached exactly on the long path");
  return result;
}

ExchangeSequence SolveContext::longest_monotone(const BasisPairInstance& p) {
  const SolveResult res = solve_impl(p);
  return ExchangeSequence(res.sequence.begin(), res.sequence.begin() + res.monotone_length);
}

SolveResult solve(const SplitRepresentation& rep, const BasisPairInstance& p) {
  SolveContext ctx(rep);
  return ctx.solve(p);
}

ExchangeSequence longest_monotone(const SplitRepresentation& rep, const BasisPairInstance& p) {
  SolveContext ctx(rep);
  return ctx.longest_monotone(p);
}

bool monotone_bound_check(const SplitRepresentation& rep, const BasisPairInstance& p,
                          MatroidClassTag tag) {
  SolveContext ctx(rep);
  if (tag == MatroidClassTag::paving) {
    for (const HyperedgeConstraint& c : ctx.normalized().constraints) {
      if (c.bound != ctx.normalized().rank - 1) {
        throw InputError("paving tag requires every bound to equal rank - 1");
      }
    }
  }
  const int r = ctx.normalized().rank;
  const int common = (p.a1 & p.b1).size();
  int bound = 0;
  switch (tag) {
    case MatroidClassTag::split: bound = r - 3 * common; break;
    case MatroidClassTag::base_orderable_split: bound = r - 2 * common; break;
    case MatroidClassTag::paving: bound = r - common - 2; break;
  }
  return static_cast<int>(ctx.longest_monotone(p).size()) >= bound;
}

}  // namespace bex
