#include "rearrange/ops.hpp"

#include <algorithm>
#include <cstdio>

namespace rearrange {

namespace {

using G = Generator;

// delta_k on C(arity), with k = arity+1 meaning the last face.
G face_any(int k, int arity) { return k <= arity ? G::face(k) : G::last_face(); }

OperatorSum one(OperatorWord w) { return OperatorSum::single(std::move(w)); }

OperatorSum two(OperatorWord a, OperatorWord b) {
  OperatorSum s = OperatorSum::single(std::move(a));
  s.plus(-1, std::move(b));
  return s;
}

OperatorWord power(const G& g, int k) {
  return OperatorWord(std::vector<G>(static_cast<std::size_t>(k), g));
}

}  // namespace

std::string RelationInstance::key() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "/n=%02d/i=%02d/j=%02d", n, i, j);
  return relation + buf;
}

bool RelationReport::all_hold() const {
  return std::all_of(instances.begin(), instances.end(), [](const auto& r) { return r.holds; });
}

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.holds; }));
}

std::map<std::string, std::size_t> RelationReport::counts() const {
  std::map<std::string, std::size_t> c;
  for (const auto& r : instances) ++c[r.relation];
  return c;
}

RelationInstance make_instance(std::string relation, int n, int i, int j, OperatorSum lhs,
                               OperatorSum rhs) {
  auto f = SpectralExpr::generic(n);
  auto l = apply_sum(lhs, f);
  auto r = apply_sum(rhs, f);
  bool holds = l == r;
  return {std::move(relation), n, i, j, std::move(lhs), std::move(rhs), std::move(l), std::move(r),
          holds};
}

RelationReport verify_theorem_relations(int n_max) {
  RelationReport rep;
  auto add = [&](std::string id, int n, int i, int j, OperatorSum l, OperatorSum r) {
    rep.instances.push_back(make_instance(std::move(id), n, i, j, std::move(l), std::move(r)));
  };
  for (int n = 0; n <= n_max; ++n) {
    // delta_j delta_i = delta_i delta_{j-1}, i < j, last faces included.
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 2; ++j)
        add("face-face", n, i, j, one(word({face_any(j, n + 1), face_any(i, n)})),
            one(word({face_any(i, n + 1), face_any(j - 1, n)})));
    // sigma_j sigma_i = sigma_i sigma_{j+1}, i <= j.
    for (int i = 0; i <= n - 1; ++i)
      for (int j = i; j <= n - 2; ++j)
        add("deg-deg", n, i, j, one(word({G::degeneracy(j), G::degeneracy(i)})),
            one(word({G::degeneracy(i), G::degeneracy(j + 1)})));
    // tau sigma_i = sigma_{i-1} tau on C(n), and the wrap-around tau sigma_0 = sigma_{n-1} tau^2.
    if (n >= 1) {
      for (int i = 1; i <= n - 1; ++i)
        add("cyc-deg", n, i, 0, one(word({G::cyclic(), G::degeneracy(i)})),
            one(word({G::degeneracy(i - 1), G::cyclic()})));
      add("cyc-deg-wrap", n, 0, 0, one(word({G::cyclic(), G::degeneracy(0)})),
          one(word({G::degeneracy(n - 1), G::cyclic(), G::cyclic()})));
    }
    // tau delta_i = delta_{i-1} tau, i = 1..n+1, and delta_{n+1} = tau delta_0.
    for (int i = 1; i <= n + 1; ++i)
      add("cyc-face", n, i, 0, one(word({G::cyclic(), face_any(i, n)})),
          one(word({face_any(i - 1, n), G::cyclic()})));
    add("last-face", n, 0, 0, one(word({G::last_face()})), one(word({G::cyclic(), G::face(0)})));
    // tau^{n+1} = id.
    add("cyc-order", n, 0, 0, one(power(G::cyclic(), n + 1)), one(OperatorWord()));
    // sigma_j delta_i table on C(n), variation faces only.
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        auto lhs = one(word({G::degeneracy(j), G::face(i)}));
        if (i < j - 1)
          add("deg-face-lt", n, i, j, lhs, one(word({G::face(i), G::degeneracy(j - 1)})));
        else if (i == j - 1)
          add("deg-face-pred", n, i, j, lhs,
              two(word({G::face(i), G::degeneracy(i)}), word({G::degeneracy(i), G::face(i + 1)})));
        else if (i == j)
          add("deg-face-eq", n, i, j, lhs, one(word({G::partial(i)})));
        else if (i == j + 1)
          add("deg-face-succ", n, i, j, lhs,
              two(word({G::face(i - 1), G::degeneracy(i - 1)}),
                  word({G::degeneracy(i), G::face(i - 1)})));
        else
          add("deg-face-gt", n, i, j, lhs, one(word({G::face(i - 1), G::degeneracy(j)})));
      }
    // delta_i sigma_i = sigma_{i+1} delta_i + sigma_i delta_{i+1}.
    for (int i = 0; i <= n - 1; ++i) {
      OperatorSum rhs = one(word({G::degeneracy(i + 1), G::face(i)}));
      rhs.plus(1, word({G::degeneracy(i), G::face(i + 1)}));
      add("face-deg-sum", n, i, i, one(word({G::face(i), G::degeneracy(i)})), rhs);
    }
  }
  return rep;
}

RelationReport verify_dual_relations(int n_max) {
  RelationReport rep;
  auto add = [&](std::string id, int n, int i, int j, OperatorSum l, OperatorSum r) {
    rep.instances.push_back(make_instance(std::move(id), n, i, j, std::move(l), std::move(r)));
  };
  auto d = [](int k) { return G::dual_face(k); };
  auto s = [](int k) { return G::dual_degeneracy(k); };
  const G t = G::dual_cyclic();
  for (int n = 0; n <= n_max; ++n) {
    // (1) d_i d_j = d_{j-1} d_i (i<j), extra degeneracy d_n included.
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j && i <= n - 1 && n >= 2; ++i)
        add("dual-dd", n, i, j, one(word({d(i), d(j)})), one(word({d(j - 1), d(i)})));
    //     s_i s_j = s_{j+1} s_i (i<=j), last face s_n included.
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        add("dual-ss", n, i, j, one(word({s(i), s(j)})), one(word({s(j + 1), s(i)})));
    // (2) d_i s_j for s_0..s_{n-1} and regular d_0..d_n.
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i) {
        auto lhs = one(word({d(i), s(j)}));
        if (i < j)
          add("dual-ds-lt", n, i, j, lhs, one(word({s(j - 1), d(i)})));
        else if (i == j)
          // s_{j-1} = delta_j, which for j = 0 is the face delta_0 outside the s family.
          add("dual-ds-eq", n, i, j, lhs,
              two(word({G::face(j), d(j)}), word({d(j + 1), G::face(j)})));
        else if (i == j + 1)
          add("dual-ds-succ", n, i, j, lhs, one(word({G::partial(j + 1)})));
        else if (i == j + 2)
          add("dual-ds-succ2", n, i, j, lhs,
              two(word({s(j), d(j + 1)}), word({d(j + 1), s(j + 1)})));
        else
          add("dual-ds-gt", n, i, j, lhs, one(word({s(j), d(i - 1)})));
      }
    // (3) cyclic relations.
    add("dual-t-order", n, 0, 0, one(power(t, n + 1)), one(OperatorWord()));
    for (int i = 1; i <= n; ++i) {
      add("dual-dt", n, i, 0, one(word({d(i), t})), one(word({t, d(i - 1)})));
      add("dual-st", n, i, 0, one(word({s(i), t})), one(word({t, s(i - 1)})));
    }
    if (n >= 1) add("dual-d0t", n, 0, 0, one(word({d(0), t})), one(word({d(n)})));
    add("dual-s0t", n, 0, 0, one(word({s(0), t})), one(word({t, t, s(n)})));
  }
  return rep;
}

}  // namespace rearrange
