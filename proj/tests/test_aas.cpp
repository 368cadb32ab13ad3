#include <catch2/catch_amalgamated.hpp>

#include "qflavor/aas.hpp"

using namespace qflavor;

namespace {

// Oracle: swap value from explicit full-layout matrix elements.
cplx overlap_oracle(const UnitaryOp& u, const QState& x, const QState& y) {
  Mat m = full_matrix(u, x.layout);
  return y.amp.dot(m * x.amp) + x.amp.dot(m * y.amp);
}

// Unitary completion mapping chosen orthonormal vectors onto basis states.
UnitaryOp basis_rotation(const RegisterLayout& l, const std::vector<Vec>& vs,
                         const std::vector<std::size_t>& images) {
  const std::size_t d = l.dim();
  std::vector<Vec> cols = vs;
  for (std::size_t e = 0; e < d && cols.size() < d; ++e) {
    Vec cand = Vec::Unit(d, e);
    for (const auto& c : cols) cand -= c.dot(cand) * c;
    if (cand.norm() > 1e-6) cols.push_back(cand.normalized());
  }
  std::vector<bool> used(d, false);
  for (std::size_t i : images) used[i] = true;
  std::vector<std::size_t> order = images;
  for (std::size_t e = 0; e < d; ++e)
    if (!used[e]) order.push_back(e);
  Mat m = Mat::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) m += Vec::Unit(d, order[k]) * cols[k].adjoint();
  return make_unitary(l.registers(), m);
}

}  // namespace

TEST_CASE("swap value gamma") {
  RegisterLayout l({{"Q", 2}});
  QState x = make_basis_state(l, {0});
  QState y = make_basis_state(l, {1});

  REQUIRE(std::abs(aas::gamma_of(gate_on("Q", pauli_x2()), x, y) - 2.0) < 1e-14);
  REQUIRE(aas::gamma_of(identity_on({{"Q", 2}}), x, y) < 1e-14);

  SECTION("matches the direct matrix-element oracle on random instances") {
    Rng rng(101);
    RegisterLayout l3({{"A", 2}, {"B", 3}, {"C", 2}});
    for (int t = 0; t < 10; ++t) {
      auto [rx, ry] = random_orthogonal_pair(rng, l3);
      UnitaryOp u = haar_unitary(rng, {{"A", 2}, {"B", 3}, {"C", 2}});
      REQUIRE(std::abs(aas::gamma_of(u, rx, ry) - std::abs(overlap_oracle(u, rx, ry))) <
              1e-12);
    }
  }
  SECTION("non-orthogonal inputs rejected") {
    QState plus = apply(gate_on("Q", hadamard2()), x);
    REQUIRE_THROWS_AS(aas::gamma_of(gate_on("Q", pauli_x2()), x, plus),
                      precondition_error);
  }
}

TEST_CASE("phase alignment") {
  RegisterLayout l({{"Q", 2}});
  QState x = make_basis_state(l, {0});
  QState y = make_basis_state(l, {1});

  REQUIRE(std::abs(aas::phase_angle(gate_on("Q", pauli_x2()), x, y)) < 1e-14);

  UnitaryOp ix{{{"Q", 2}}, cplx(0, 1) * pauli_x2()};
  REQUIRE(std::abs(aas::phase_angle(ix, x, y) + M_PI / 2) < 1e-14);

  SECTION("gamma 0 defaults to theta 0") {
    REQUIRE(aas::phase_angle(identity_on({{"Q", 2}}), x, y) == 0.0);
  }
  SECTION("aligned real part equals gamma") {
    Rng rng(55);
    RegisterLayout l2({{"A", 3}, {"B", 2}});
    for (int t = 0; t < 10; ++t) {
      auto [rx, ry] = random_orthogonal_pair(rng, l2);
      UnitaryOp u = haar_unitary(rng, {{"A", 3}, {"B", 2}});
      UnitaryOp aligned = aas::phase_align(u, rx, ry);
      const double g = aas::gamma_of(u, rx, ry);
      REQUIRE(std::abs(overlap_oracle(aligned, rx, ry).real() - g) < 1e-12);
    }
  }
}

TEST_CASE("swap-to-distinguish circuit") {
  RegisterLayout l({{"Q", 2}});
  QState x = make_basis_state(l, {0});
  QState y = make_basis_state(l, {1});
  QState psi = superpose(x, y, 1.0, 1.0);
  QState phi = superpose(x, y, 1.0, -1.0);

  SECTION("perfect swapper gives advantage 1") {
    auto build = aas::build_distinguisher(gate_on("Q", pauli_x2()), x, y);
    REQUIRE(std::abs(build.report.gamma - 2.0) < 1e-13);
    REQUIRE(std::abs(build.report.advantage - 1.0) < 1e-13);
    REQUIRE(std::abs(aas::advantage(build.dist, psi, phi) - 1.0) < 1e-13);
  }
  SECTION("identity gives advantage 0") {
    auto build = aas::build_distinguisher(identity_on({{"Q", 2}}), x, y);
    REQUIRE(build.report.advantage < 1e-13);
  }
  SECTION("advantage equals gamma/2 on random instances") {
    Rng rng(77);
    RegisterLayout l4({{"A", 2}, {"B", 2}, {"C", 3}, {"D", 2}});
    for (int t = 0; t < 20; ++t) {
      auto [rx, ry] = random_orthogonal_pair(rng, l4);
      UnitaryOp u = haar_unitary(rng, {{"A", 2}, {"B", 2}, {"C", 3}});
      auto build = aas::build_distinguisher(u, rx, ry);
      QState rpsi = superpose(rx, ry, 1.0, 1.0);
      QState rphi = superpose(rx, ry, 1.0, -1.0);
      const double adv = aas::advantage(build.dist, rpsi, rphi);
      REQUIRE(std::abs(adv - build.report.gamma / 2.0) < 1e-9);
    }
  }
  SECTION("locality: the circuit only touches U's registers plus the ancilla") {
    Rng rng(78);
    RegisterLayout l4({{"A", 2}, {"B", 2}, {"C", 3}});
    auto [rx, ry] = random_orthogonal_pair(rng, l4);
    UnitaryOp u = haar_unitary(rng, {{"B", 2}});
    auto build = aas::build_distinguisher(u, rx, ry);
    REQUIRE(build.dist.v.targets.size() == 2);
    REQUIRE(build.dist.v.acts_on("B"));
    REQUIRE(!build.dist.v.acts_on("A"));
    REQUIRE(!build.dist.v.acts_on("C"));
  }
}

TEST_CASE("distinguish-to-swap circuit") {
  Rng rng(303);
  RegisterLayout l({{"out", 2}, {"S", 3}});

  SECTION("perfect distinguisher gives swap value 1") {
    auto [psi, phi] = random_orthogonal_pair(rng, l);
    UnitaryOp v = basis_rotation(l, {psi.amp, phi.amp}, {l.flat({1, 0}), l.flat({0, 0})});
    auto [u, delta] = aas::build_swapper(v, psi, phi);
    REQUIRE(std::abs(delta - 1.0) < 1e-12);
    QState x = superpose(psi, phi, 1.0, 1.0);
    QState y = superpose(psi, phi, 1.0, -1.0);
    REQUIRE(std::abs(std::abs(aas::swap_overlap(u, x, y)) / 2.0 - 1.0) < 1e-12);
  }
  SECTION("outcome-blind distinguisher gives 0") {
    RegisterLayout l2({{"out", 2}, {"S", 2}});
    QState psi = make_basis_state(l2, {0, 0});
    QState phi = make_basis_state(l2, {0, 1});
    UnitaryOp v = identity_on({{"out", 2}, {"S", 2}});
    auto [u, delta] = aas::build_swapper(v, psi, phi);
    REQUIRE(delta < 1e-13);
    QState x = superpose(psi, phi, 1.0, 1.0);
    QState y = superpose(psi, phi, 1.0, -1.0);
    REQUIRE(std::abs(aas::swap_overlap(u, x, y)) < 1e-12);
  }
  SECTION("swap identity holds for random distinguishers") {
    RegisterLayout l4({{"out", 2}, {"S", 2}, {"T", 3}});
    for (int t = 0; t < 20; ++t) {
      auto [psi, phi] = random_orthogonal_pair(rng, l4);
      UnitaryOp v = haar_unitary(rng, {{"out", 2}, {"S", 2}, {"T", 3}});
      auto [u, delta] = aas::build_swapper(v, psi, phi);
      QState x = superpose(psi, phi, 1.0, 1.0);
      QState y = superpose(psi, phi, 1.0, -1.0);
      REQUIRE(std::abs(std::abs(aas::swap_overlap(u, x, y)) / 2.0 - delta) < 1e-9);
    }
  }
  SECTION("locality: U only touches V's registers") {
    RegisterLayout l4({{"out", 2}, {"S", 2}, {"T", 3}});
    auto [psi, phi] = random_orthogonal_pair(rng, l4);
    UnitaryOp v = haar_unitary(rng, {{"out", 2}, {"S", 2}});
    auto [u, delta] = aas::build_swapper(v, psi, phi);
    REQUIRE(!u.acts_on("T"));
  }
}

TEST_CASE("round trip preserves the advantage") {
  Rng rng(404);
  RegisterLayout l({{"A", 2}, {"B", 3}});
  for (int t = 0; t < 5; ++t) {
    auto [x, y] = random_orthogonal_pair(rng, l);
    UnitaryOp u = haar_unitary(rng, {{"A", 2}, {"B", 3}});
    auto fwd = aas::build_distinguisher(u, x, y);

    // feed the built circuit back as a plain distinguisher on the enlarged space
    QState psi = superpose(x, y, 1.0, 1.0);
    QState phi = superpose(x, y, 1.0, -1.0);
    QState psi_e = tensor(*fwd.dist.aux, psi);
    QState phi_e = tensor(*fwd.dist.aux, phi);
    auto [u2, delta] = aas::build_swapper(fwd.dist.v, psi_e, phi_e);
    REQUIRE(std::abs(delta - fwd.report.advantage) < 1e-10);

    QState x2 = superpose(psi_e, phi_e, 1.0, 1.0);
    QState y2 = superpose(psi_e, phi_e, 1.0, -1.0);
    auto back = aas::build_distinguisher(u2, x2, y2);
    REQUIRE(std::abs(back.report.advantage - fwd.report.advantage) < 1e-9);
  }
}

TEST_CASE("generalized equivalence with auxiliary states") {
  RegisterLayout a({{"Q", 2}});
  RegisterLayout z({{"Z", 3}});
  QState x = make_basis_state(a, {0});
  QState y = make_basis_state(a, {1});
  Rng rng(505);
  QState tau = random_state(rng, z);

  SECTION("bit flip ignoring the auxiliary register") {
    auto g = aas::build_generalized_swapper_to_distinguisher(gate_on("Q", pauli_x2()), x,
                                                             y, tau);
    REQUIRE(std::abs(g.report.gamma - 2.0) < 1e-12);
    REQUIRE(std::abs(g.claim_value - 2.0) < 1e-12);
    REQUIRE(std::abs(g.report.advantage - 1.0) < 1e-12);
  }
  SECTION("identity") {
    auto g = aas::build_generalized_swapper_to_distinguisher(identity_on({{"Q", 2}}), x, y,
                                                             tau);
    REQUIRE(g.report.gamma < 1e-13);
    REQUIRE(g.report.advantage < 1e-13);
  }
  SECTION("advantage is gamma^2/4 and the doubled swap value gamma^2/2") {
    RegisterLayout a2({{"Q", 2}, {"R", 2}});
    for (int t = 0; t < 10; ++t) {
      auto [rx, ry] = random_orthogonal_pair(rng, a2);
      QState rtau = random_state(rng, z);
      UnitaryOp u = haar_unitary(rng, {{"Q", 2}, {"R", 2}, {"Z", 3}});  // entangles with Z
      auto g = aas::build_generalized_swapper_to_distinguisher(u, rx, ry, rtau);
      const double gam = g.report.gamma;
      REQUIRE(std::abs(g.claim_value - gam * gam / 2.0) < 1e-9);
      REQUIRE(std::abs(g.report.advantage - gam * gam / 4.0) < 1e-9);
    }
  }
  SECTION("locality and advice shape") {
    RegisterLayout a2({{"Q", 2}, {"R", 2}});
    auto [rx, ry] = random_orthogonal_pair(rng, a2);
    QState rtau = random_state(rng, z);
    UnitaryOp u = haar_unitary(rng, {{"Q", 2}, {"Z", 3}});  // does not touch R
    auto g = aas::build_generalized_swapper_to_distinguisher(u, rx, ry, rtau);
    REQUIRE(!g.dist.v.acts_on("R"));
    REQUIRE(g.dist.v.acts_on("Q"));
    REQUIRE(g.dist.v.acts_on("Z"));
    // advice = tau (x) (|x>|0> + |y>|1>)/sqrt2 over the primed copy and flag
    REQUIRE(g.advice.layout.num_registers() == z.num_registers() + a2.num_registers() + 1);
    REQUIRE(std::abs(norm_sq(g.advice) - 1.0) < 1e-12);
  }
  SECTION("one-dimensional auxiliary register reduces to the plain theorem") {
    RegisterLayout triv({{"Z", 1}});
    QState tau1 = make_basis_state(triv, {0});
    for (int t = 0; t < 5; ++t) {
      auto [rx, ry] = random_orthogonal_pair(rng, a);
      UnitaryOp u = haar_unitary(rng, {{"Q", 2}});
      auto plain = aas::build_distinguisher(u, rx, ry);
      auto gen = aas::build_generalized_swapper_to_distinguisher(u, rx, ry, tau1);
      REQUIRE(std::abs(gen.report.gamma - plain.report.gamma) < 1e-10);
      REQUIRE(gen.report.advantage <= plain.report.advantage + 1e-10);
    }
  }
}

TEST_CASE("generalized distinguish-to-swap") {
  Rng rng(606);
  RegisterLayout sys({{"out", 2}, {"S", 2}});
  RegisterLayout adv({{"Z", 2}});

  SECTION("perfect distinguisher ignoring the advice") {
    auto [psi, phi] = random_orthogonal_pair(rng, sys);
    UnitaryOp v = basis_rotation(sys, {psi.amp, phi.amp},
                                 {sys.flat({1, 0}), sys.flat({0, 0})});
    QState tau = random_state(rng, adv);
    auto [u, delta] = aas::generalized_distinguisher_to_swapper(v, tau, psi, phi);
    REQUIRE(std::abs(delta - 1.0) < 1e-12);
    QState xt = tensor(superpose(psi, phi, 1.0, 1.0), tau);
    QState yt = tensor(superpose(psi, phi, 1.0, -1.0), tau);
    REQUIRE(std::abs(std::abs(aas::swap_overlap(u, xt, yt)) / 2.0 - 1.0) < 1e-12);
  }
  SECTION("non-acting distinguisher") {
    QState psi = make_basis_state(sys, {0, 0});
    QState phi = make_basis_state(sys, {0, 1});
    QState tau = random_state(rng, adv);
    UnitaryOp v = identity_on({{"out", 2}, {"S", 2}, {"Z", 2}});
    auto [u, delta] = aas::generalized_distinguisher_to_swapper(v, tau, psi, phi);
    REQUIRE(delta < 1e-12);
  }
  SECTION("identity equality on random advice-using distinguishers") {
    for (int t = 0; t < 20; ++t) {
      auto [psi, phi] = random_orthogonal_pair(rng, sys);
      QState tau = random_state(rng, adv);
      UnitaryOp v = haar_unitary(rng, {{"out", 2}, {"S", 2}, {"Z", 2}});
      auto [u, delta] = aas::generalized_distinguisher_to_swapper(v, tau, psi, phi);
      QState xt = tensor(superpose(psi, phi, 1.0, 1.0), tau);
      QState yt = tensor(superpose(psi, phi, 1.0, -1.0), tau);
      REQUIRE(std::abs(std::abs(aas::swap_overlap(u, xt, yt)) / 2.0 - delta) < 1e-9);
    }
  }
}
