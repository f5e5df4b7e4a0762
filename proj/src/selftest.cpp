#include "beztate/selftest.hpp"

#include <functional>
#include <string>

#include "beztate/bezoutian.hpp"
#include "beztate/koszul.hpp"
#include "beztate/tate.hpp"

namespace beztate {

namespace {

Polynomial power(const Field& k, int n, int i, int e) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  m.exponents[static_cast<std::size_t>(i)] = e;
  return Polynomial::monomial(k, m, k.one());
}

Polynomial from_exponents(const Field& k, std::vector<int> e, long long c = 1) {
  return Polynomial::monomial(k, Monomial{std::move(e)}, k.from_int(c));
}

// Sum over 0 <= beta <= (d-1, ..., d-1) of x^beta y^{(d-1) - beta}.
BiPolynomial power_bezoutian(const Field& k, int n, int d) {
  BiPolynomial out(k, n);
  std::vector<int> beta(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    Monomial x{beta};
    Monomial y{beta};
    for (auto& e : y.exponents) e = d - 1 - e;
    out.add_term(x, y, k.one());
    std::size_t j = 0;
    while (j < beta.size() && beta[j] == d - 1) beta[j++] = 0;
    if (j == beta.size()) break;
    ++beta[j];
  }
  return out;
}

void guarded(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(name, {}, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

Report run_selftest() {
  Report report("selftest");
  const Field q = Field::rationals();

  for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    guarded(report, "power Bezoutian", [&, n = n, d = d] {
      std::vector<Polynomial> forms;
      for (int i = 0; i <= n; ++i) forms.push_back(power(q, n, i, d));
      report.add("power Bezoutian", {n, d}, bezoutian(forms).delta == power_bezoutian(q, n, d));
    });
  }

  guarded(report, "complete intersection (x0^2, x1^2)", [&] {
    const KoszulSetup ci = make_koszul_setup({power(q, 1, 0, 2), power(q, 1, 1, 2)});
    report.merge(apolarity_check(ci));
    TateConfig cfg;
    cfg.field = q;
    cfg.n = 1;
    cfg.d = 2;
    cfg.p_min = -2;
    cfg.p_max = 2;
    cfg.subspace = ci.forms;
    const TateWindow w = build_window(cfg, -2, 5);
    report.merge(verify_complex(w));
    report.merge(verify_exactness(w));
  });

  guarded(report, "net (x^2, y^2, xy)", [&] {
    const KoszulSetup net =
        make_koszul_setup({from_exponents(q, {2, 0}), from_exponents(q, {0, 2}), from_exponents(q, {1, 1})});
    const SyzygySpace syz3 = syzygy_space(net, 3);
    report.add("dim Syz_3 = 2, Kosz_3 = 0", {3}, syz3.basis.size() == 2 && syz3.koszul_subspace.empty(),
               std::to_string(syz3.basis.size()) + " and " + std::to_string(syz3.koszul_subspace.size()));
    const Polynomial zero(q, 1);
    const std::vector<std::vector<Polynomial>> expected = {
        {zero, from_exponents(q, {1, 0}, -1), from_exponents(q, {0, 1})},
        {from_exponents(q, {0, 1}, -1), zero, from_exponents(q, {1, 0})}};
    report.add("Bezout syzygies (0,-x,y), (-y,0,x)", {3}, bezout_syzygies(net, 3) == expected);
    report.merge(syzygy_duality_check(net, 3));
    report.merge(syzygy_duality_check(net, 4));
    report.merge(generation_check(net, 6));
  });

  guarded(report, "full window", [&] {
    TateConfig cfg;
    cfg.n = 1;
    cfg.d = 2;
    cfg.p_min = -2;
    cfg.p_max = 2;
    const TateWindow w = build_window(cfg, 0, 5);
    report.merge(verify_complex(w));
    report.merge(verify_exactness(w));
  });
  return report;
}

}  // namespace beztate
