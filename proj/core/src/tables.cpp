#include "sphroots/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sphroots/errors.hpp"

namespace sphroots {

namespace {

constexpr int kAny = 1 << 20;

/// Builder for Sigma; indices are 1-based.
struct Sig {
  int n;
  std::vector<Weight> out;

  Weight a(int i) const { return Weight::unit(n, i - 1); }
  /// alpha_i + ... + alpha_j, zero when i > j.
  Weight s(int i, int j) const {
    Weight w = Weight::zero(n);
    for (int k = i; k <= j; ++k) w[k - 1] += 1;
    return w;
  }
  Sig& add(const Weight& w) {
    out.push_back(w);
    return *this;
  }
  Sig& each(int i, int j) {
    for (int k = i; k <= j; ++k) add(a(k));
    return *this;
  }
  /// alpha_i + 2(alpha_{i+1} + ... + alpha_{n-1}) + alpha_n, the C_n tail.
  Weight c_tail(int i) const { return a(i) + 2 * s(i + 1, n - 1) + a(n); }
};

using ParamsFn = std::function<std::vector<Params>(int)>;
using RankFn = std::function<int(int, const Params&)>;
using SigmaFn = std::function<std::vector<Weight>(int, const Params&)>;

ParamsFn fixed(Params p) {
  return [p](int) { return std::vector<Params>{p}; };
}

ParamsFn at_n(std::function<Params(int)> f) {
  return [f](int n) { return std::vector<Params>{f(n)}; };
}

/// Rows with parameters ranging over k.
ParamsFn over_k(std::function<bool(int n, int k)> ok, std::function<Params(int n, int k)> p) {
  return [ok, p](int n) {
    std::vector<Params> out;
    for (int k = 1; k <= n; ++k)
      if (ok(n, k)) out.push_back(p(n, k));
    return out;
  };
}

RankFn constant(int r) {
  return [r](int, const Params&) { return r; };
}

struct Builder {
  Table& t;
  Series series;

  void row(std::string label, int min_rank, int max_rank, ParamsFn params, std::vector<CRoot> psi, RankFn rank,
           SigmaFn sigma) {
    TableRow r;
    r.table_id = t.id;
    r.row_id = static_cast<int>(t.rows.size()) + 1;
    r.series = series;
    r.label = std::move(label);
    r.min_rank = min_rank;
    r.max_rank = max_rank;
    r.params = std::move(params);
    r.psi = std::move(psi);
    r.rank = std::move(rank);
    r.sigma = std::move(sigma);
    t.rows.push_back(std::move(r));
  }
};

const std::vector<CRoot> kOne{{1}};
const std::vector<CRoot> k10_01{{1, 0}, {0, 1}};
const std::vector<CRoot> k10_11{{1, 0}, {1, 1}};
const std::vector<CRoot> k01_11{{0, 1}, {1, 1}};

/// alpha_i + alpha_{i+1} for i < last, the shape shared by several D_n rows.
std::vector<Weight> d_pairs(int n, bool even_split) {
  Sig g{n, {}};
  if (!even_split) {
    for (int i = 1; i <= n - 2; ++i) g.add(g.a(i) + g.a(i + 1));
    g.add(g.a(n));
  } else {
    for (int i = 1; i <= n - 3; ++i) g.add(g.a(i) + g.a(i + 1));
    g.add(g.a(n - 2) + g.a(n));
    g.add(g.a(n - 1));
  }
  return g.out;
}

/// alpha_{2i-1} + 2 alpha_{2i} + alpha_{2i+1} chain of the (D_n, n) rows.
std::vector<Weight> d_spinor(int n) {
  Sig g{n, {}};
  int m = n / 2;
  for (int i = 1; i <= m - 1; ++i) g.add(g.a(2 * i - 1) + 2 * g.a(2 * i) + g.a(2 * i + 1));
  if (n % 2 == 1)
    g.add(g.a(2 * m - 1) + g.a(2 * m) + g.a(2 * m + 1));
  else
    g.add(g.a(2 * m));
  return g.out;
}

Table make_table1() {
  Table t{1, "psi1", {}};
  Builder b{t, Series::A};
  b.row("(A_n, k)", 1, kAny, over_k([](int n, int k) { return 2 * k <= n + 1; }, [](int, int k) { return Params{k}; }),
        kOne, [](int, const Params& p) { return p[0]; },
        [](int n, const Params& p) {
          Sig g{n, {}};
          int k = p[0];
          for (int i = 1; i <= k - 1; ++i) g.add(g.a(i) + g.a(n + 1 - i));
          g.add(g.s(k, n + 1 - k));
          return g.out;
        });
  b.series = Series::B;
  b.row("(B_n, 1)", 3, kAny, fixed({1}), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1)).add(2 * g.s(2, n)).out;
  });
  b.row("(B_n, n)", 3, kAny, at_n([](int n) { return Params{n}; }), kOne, constant(1), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.s(1, n)).out;
  });
  b.series = Series::C;
  b.row("(C_n, 1)", 2, kAny, fixed({1}), kOne, constant(1), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.c_tail(1)).out;
  });
  b.row("(C_n, 2)", 4, kAny, fixed({2}), kOne, constant(3), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + g.a(3)).add(g.a(2)).add(g.c_tail(3)).out;
  });
  b.row("(C_5, 3)", 5, 5, fixed({3}), kOne, constant(5), [](int n, const Params&) {
    Sig g{n, {}};
    return g.each(1, 5).out;
  });
  b.row("(C_n, 3)", 6, kAny, fixed({3}), kOne, constant(6), [](int n, const Params&) {
    Sig g{n, {}};
    return g.each(1, 5).add(g.c_tail(5)).out;
  });
  b.row("(C_n, n-2)", 6, kAny, at_n([](int n) { return Params{n - 2}; }), kOne, constant(6), [](int n, const Params&) {
    Sig g{n, {}};
    return g.each(1, 3).add(g.a(n - 1)).add(g.a(n)).add(g.s(4, n - 2)).out;
  });
  b.row("(C_n, n-1)", 3, kAny, at_n([](int n) { return Params{n - 1}; }), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + g.a(n)).add(g.s(2, n - 1)).out;
  });
  b.row("(C_n, n)", 2, kAny, at_n([](int n) { return Params{n}; }), kOne, [](int n, const Params&) { return n; },
        [](int n, const Params&) {
          Sig g{n, {}};
          for (int i = 1; i <= n - 1; ++i) g.add(2 * g.a(i));
          return g.add(g.a(n)).out;
        });
  b.series = Series::D;
  b.row("(D_n, 1)", 4, kAny, fixed({1}), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1)).add(2 * g.s(2, n - 2) + g.a(n - 1) + g.a(n)).out;
  });
  b.row("(D_n, n), n odd", 5, kAny,
        [](int n) { return n % 2 == 1 ? std::vector<Params>{{n}} : std::vector<Params>{}; }, kOne,
        [](int n, const Params&) { return n / 2; }, [](int n, const Params&) { return d_spinor(n); });
  b.row("(D_n, n), n even", 4, kAny,
        [](int n) { return n % 2 == 0 ? std::vector<Params>{{n}} : std::vector<Params>{}; }, kOne,
        [](int n, const Params&) { return n / 2; }, [](int n, const Params&) { return d_spinor(n); });
  b.series = Series::G;
  b.row("(G_2, 1)", 2, 2, fixed({1}), kOne, constant(1), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + g.a(2)).out;
  });
  b.series = Series::F;
  b.row("(F_4, 3)", 4, 4, fixed({3}), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + g.a(4)).add(g.a(2) + g.a(3)).out;
  });
  b.row("(F_4, 4)", 4, 4, fixed({4}), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + 2 * g.a(2) + 3 * g.a(3)).add(g.a(4)).out;
  });
  b.series = Series::E;
  b.row("(E_6, 6)", 6, 6, fixed({6}), kOne, constant(2), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1) + g.a(3) + g.a(4) + g.a(5) + g.a(6)).add(2 * g.a(2) + g.a(3) + 2 * g.a(4) + g.a(5)).out;
  });
  b.row("(E_7, 7)", 7, 7, fixed({7}), kOne, constant(3), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(2 * g.a(1) + g.a(2) + 2 * g.a(3) + 2 * g.a(4) + g.a(5))
        .add(g.a(2) + g.a(3) + 2 * g.a(4) + 2 * g.a(5) + 2 * g.a(6))
        .add(g.a(7))
        .out;
  });
  return t;
}

Table make_table2() {
  Table t{2, "psi2", {}};
  Builder b{t, Series::B};
  b.row("(B_n, n), {a_n, 2a_n}", 3, kAny, at_n([](int n) { return Params{n}; }), {{1}, {2}},
        [](int n, const Params&) { return n; },
        [](int n, const Params&) {
          Sig g{n, {}};
          for (int i = 1; i <= n - 1; ++i) g.add(g.a(i) + g.a(i + 1));
          return g.add(g.a(n)).out;
        });
  b.series = Series::F;
  b.row("(F_4, 3), {a_3, 3a_3}", 4, 4, fixed({3}), {{1}, {3}}, constant(4), [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1)).add(g.a(2) + g.a(3)).add(g.a(3)).add(g.a(4)).out;
  });
  return t;
}

/// Rows shared by the A_n and B_n tables.
void add_ab_rows(Builder& b) {
  b.row("(k, n), n-k > k >= 1, {(1,0), (0,1)}", 3, kAny,
        over_k([](int n, int k) { return n - k > k; }, [](int n, int k) { return Params{k, n}; }), k10_01,
        [](int, const Params& p) { return 2 * p[0] + 1; },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, k).add(g.s(k + 1, n - k)).each(n - k + 1, n).out;
        });
  b.row("(k, n), k >= n-k >= 2, {(1,0), (0,1)}", 3, kAny,
        over_k([](int n, int k) { return k >= n - k && n - k >= 2; }, [](int n, int k) { return Params{k, n}; }),
        k10_01, [](int n, const Params& p) { return 2 * (n - p[0]); },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, n - k - 1).add(g.s(n - k, k)).each(k + 1, n).out;
        });
  b.row("(k, n), n-k >= k >= 2, {(1,0), (1,1)}", 3, kAny,
        over_k([](int n, int k) { return n - k >= k && k >= 2; }, [](int n, int k) { return Params{k, n}; }), k10_11,
        [](int, const Params& p) { return 2 * p[0]; },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, k - 1).add(g.s(k, n - k)).each(n - k + 1, n).out;
        });
  b.row("(k, n), k > n-k >= 1, {(1,0), (1,1)}", 3, kAny,
        over_k([](int n, int k) { return k > n - k && n - k >= 1; }, [](int n, int k) { return Params{k, n}; }),
        k10_11, [](int n, const Params& p) { return 2 * (n - p[0]) + 1; },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, n - k).add(g.s(n - k + 1, k)).each(k + 1, n).out;
        });
}

Table make_table_a() {
  Table t{3, "A", {}};
  Builder b{t, Series::A};
  add_ab_rows(b);
  b.row("(k, k+1), n-k >= k >= 2, {(1,0), (1,1)}", 3, kAny,
        over_k([](int n, int k) { return n - k >= k && k >= 2; }, [](int, int k) { return Params{k, k + 1}; }),
        k10_11, [](int, const Params& p) { return 2 * p[0]; },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, k).add(g.s(k + 1, n - k + 1)).each(n - k + 2, n).out;
        });
  b.row("(k, k+1), k > n-k >= 2, {(1,0), (1,1)}", 3, kAny,
        over_k([](int n, int k) { return k > n - k && n - k >= 2; }, [](int, int k) { return Params{k, k + 1}; }),
        k10_11, [](int n, const Params& p) { return 2 * (n - p[0]) + 1; },
        [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.each(1, n - k).add(g.s(n - k + 1, k)).each(k + 1, n).out;
        });
  b.row("(k, k+2), 2 <= k <= n-3, {(1,0), (0,1)}", 3, kAny,
        over_k([](int n, int k) { return k >= 2 && k <= n - 3; }, [](int, int k) { return Params{k, k + 2}; }),
        k10_01, constant(5), [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, k)).add(g.a(k + 1)).add(g.s(k + 2, n - 1)).add(g.a(n)).out;
        });
  b.row("(2, l), 4 <= l <= n-1, {(1,0), (1,1)}", 3, kAny,
        over_k([](int n, int l) { return l >= 4 && l <= n - 1; }, [](int, int l) { return Params{2, l}; }), k10_11,
        constant(5), [](int n, const Params& p) {
          int l = p[1];
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, l - 2)).add(g.a(l - 1)).add(g.s(l, n - 1)).add(g.a(n)).out;
        });
  return t;
}

Table make_table_b() {
  Table t{4, "B", {}};
  Builder b{t, Series::B};
  add_ab_rows(b);
  return t;
}

Table make_table_c() {
  Table t{5, "C", {}};
  Builder b{t, Series::C};
  auto first = [](int cnt) {
    return [cnt](int n, const Params&) {
      Sig g{n, {}};
      return g.each(1, cnt).out;
    };
  };
  auto first_tail = [](int cnt) {
    return [cnt](int n, const Params&) {
      Sig g{n, {}};
      return g.each(1, cnt).add(g.c_tail(cnt)).out;
    };
  };
  b.row("(1, 2), n = 3, {(0,1), (1,1)}", 3, 3, fixed({1, 2}), k01_11, constant(3), first(3));
  b.row("(1, 2), n >= 4, {(0,1), (1,1)}", 4, kAny, fixed({1, 2}), k01_11, constant(4), first_tail(3));
  b.row("(1, 3), n = 4, {(1,0), (0,1)}", 4, 4, fixed({1, 3}), k10_01, constant(4), first(4));
  b.row("(1, 3), n >= 5, {(1,0), (0,1)}", 5, kAny, fixed({1, 3}), k10_01, constant(5), first_tail(4));
  b.row("(1, n-1), n >= 5, {(1,0), (0,1)}", 5, kAny, at_n([](int n) { return Params{1, n - 1}; }), k10_01, constant(5),
        [](int n, const Params&) {
          Sig g{n, {}};
          return g.each(1, 2).add(g.s(3, n - 2)).each(n - 1, n).out;
        });
  b.row("(1, n-1), n >= 4, {(0,1), (1,1)}", 4, kAny, at_n([](int n) { return Params{1, n - 1}; }), k01_11,
        constant(4), [](int n, const Params&) {
          Sig g{n, {}};
          return g.each(1, 2).add(g.s(3, n - 1)).add(g.a(n)).out;
        });
  b.row("(1, n), {(1,0), (1,1)}", 3, kAny, at_n([](int n) { return Params{1, n}; }), k10_11, constant(3),
        [](int n, const Params&) {
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, n - 1)).add(g.a(n)).out;
        });
  b.row("(2, 3), n = 4, {(1,0), (1,1)}", 4, 4, fixed({2, 3}), k10_11, constant(4), first(4));
  b.row("(2, 3), n >= 5, {(1,0), (1,1)}", 5, kAny, fixed({2, 3}), k10_11, constant(5), first_tail(4));
  b.row("(2, l), 4 <= l <= n-2, {(1,0), (1,1)}", 6, kAny,
        over_k([](int n, int l) { return l >= 4 && l <= n - 2; }, [](int, int l) { return Params{2, l}; }), k10_11,
        constant(6), [](int n, const Params& p) {
          int l = p[1];
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, l - 2)).each(l - 1, l + 1).add(g.c_tail(l + 1)).out;
        });
  b.row("(2, n-1), n >= 5, {(1,0), (1,1)}", 5, kAny, at_n([](int n) { return Params{2, n - 1}; }), k10_11,
        constant(5), [](int n, const Params&) {
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, n - 3)).each(n - 2, n).out;
        });
  b.row("(k, k+2), 2 <= k <= n-4, {(1,0), (0,1)}", 6, kAny,
        over_k([](int n, int k) { return k >= 2 && k <= n - 4; }, [](int, int k) { return Params{k, k + 2}; }),
        k10_01, constant(6), [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, k)).each(k + 1, k + 3).add(g.c_tail(k + 3)).out;
        });
  b.row("(k, n-1), 2 <= k <= n-3, {(0,1), (1,1)}", 5, kAny,
        over_k([](int n, int k) { return k >= 2 && k <= n - 3; }, [](int n, int k) { return Params{k, n - 1}; }),
        k01_11, constant(5), [](int n, const Params& p) {
          int k = p[0];
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, k)).add(g.a(k + 1)).add(g.s(k + 2, n - 1)).add(g.a(n)).out;
        });
  b.row("(n-3, n-1), n >= 5, {(1,0), (0,1)}", 5, kAny, at_n([](int n) { return Params{n - 3, n - 1}; }), k10_01,
        constant(5), [](int n, const Params&) {
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, n - 3)).each(n - 2, n).out;
        });
  b.row("(n-2, n-1), n >= 5, {(1,0), (1,1)}", 5, kAny, at_n([](int n) { return Params{n - 2, n - 1}; }), k10_11,
        constant(5), [](int n, const Params&) {
          Sig g{n, {}};
          return g.each(1, 2).add(g.s(3, n - 2)).each(n - 1, n).out;
        });
  b.row("(n-2, n-1), n >= 4, {(0,1), (1,1)}", 4, kAny, at_n([](int n) { return Params{n - 2, n - 1}; }), k01_11,
        constant(4), [](int n, const Params&) {
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, n - 2)).each(n - 1, n).out;
        });
  b.row("(n-1, n), {(1,0), (1,1)}", 3, kAny, at_n([](int n) { return Params{n - 1, n}; }), k10_11, constant(3),
        [](int n, const Params&) {
          Sig g{n, {}};
          return g.add(g.a(1)).add(g.s(2, n - 1)).add(g.a(n)).out;
        });
  return t;
}

Table make_table_d() {
  Table t{6, "D", {}};
  Builder b{t, Series::D};
  auto one_n = at_n([](int n) { return Params{1, n}; });
  auto last_two = at_n([](int n) { return Params{n - 1, n}; });
  auto parity = [](int want, std::function<Params(int)> p) {
    return [want, p](int n) { return n % 2 == want ? std::vector<Params>{p(n)} : std::vector<Params>{}; };
  };
  auto n_minus_1 = [](int n, const Params&) { return n - 1; };
  auto three = [](int n, const Params&) {
    Sig g{n, {}};
    return g.add(g.a(1)).add(g.s(2, n - 1)).add(g.s(2, n - 2) + g.a(n)).out;
  };
  auto all5 = [](int n, const Params&) {
    Sig g{n, {}};
    return g.each(1, 5).out;
  };
  auto six = [](int n, const Params&) {
    Sig g{n, {}};
    return g.each(1, 2).add(g.s(3, n - 3)).each(n - 2, n).out;
  };
  b.row("(1, n), n odd, {(1,0), (0,1)}", 5, kAny, parity(1, [](int n) { return Params{1, n}; }), k10_01, n_minus_1,
        [](int n, const Params&) { return d_pairs(n, false); });
  b.row("(1, n), n even, {(1,0), (0,1)}", 4, kAny, parity(0, [](int n) { return Params{1, n}; }), k10_01, n_minus_1,
        [](int n, const Params&) { return d_pairs(n, true); });
  b.row("(1, n), {(1,0), (1,1)}", 4, kAny, one_n, k10_11, constant(3), three);
  b.row("(1, n), {(0,1), (1,1)}", 4, kAny, one_n, k01_11, n_minus_1,
        [](int n, const Params&) { return d_pairs(n, false); });
  b.row("(2, 5), n = 5, {(1,0), (0,1)}", 5, 5, fixed({2, 5}), k10_01, constant(5), all5);
  b.row("(2, 5), n = 5, {(0,1), (1,1)}", 5, 5, fixed({2, 5}), k01_11, constant(5), all5);
  b.row("(3, 5), n = 5, {(1,0), (2,1)}", 5, 5, fixed({3, 5}), {{1, 0}, {2, 1}}, constant(5), all5);
  b.row("(3, n), n >= 6, {(1,0), (2,1)}", 6, kAny, at_n([](int n) { return Params{3, n}; }), {{1, 0}, {2, 1}},
        constant(6), six);
  b.row("(n-3, n), n >= 6, {(1,0), (0,1)}", 6, kAny, at_n([](int n) { return Params{n - 3, n}; }), k10_01,
        constant(6), six);
  b.row("(n-3, n), n >= 6, {(0,1), (1,1)}", 6, kAny, at_n([](int n) { return Params{n - 3, n}; }), k01_11,
        constant(6), six);
  b.row("(n-1, n), {(1,0), (0,1)}", 4, kAny, last_two, k10_01, constant(3), three);
  b.row("(n-1, n), n odd, {(1,0), (1,1)}", 5, kAny, parity(1, [](int n) { return Params{n - 1, n}; }), k10_11,
        n_minus_1, [](int n, const Params&) { return d_pairs(n, false); });
  b.row("(n-1, n), n even, {(1,0), (1,1)}", 4, kAny, parity(0, [](int n) { return Params{n - 1, n}; }), k10_11,
        n_minus_1, [](int n, const Params&) { return d_pairs(n, true); });
  return t;
}

/// Exceptional rows: Sigma given as coefficient vectors.
struct ExRow {
  int k, l;
  std::vector<CRoot> psi;
  std::vector<std::vector<int>> sigma;
};

Table make_exceptional(int id, std::string name, Series s, int n, const std::vector<ExRow>& rows) {
  Table t{id, name, {}};
  Builder b{t, s};
  for (const auto& r : rows) {
    std::ostringstream label;
    label << "(" << r.k << ", " << r.l << "), {" << r.psi[0] << ", " << r.psi[1] << "}";
    std::vector<Weight> sigma;
    for (const auto& v : r.sigma) sigma.emplace_back(v);
    b.row(label.str(), n, n, fixed({r.k, r.l}), r.psi, constant(static_cast<int>(sigma.size())),
          [sigma](int, const Params&) { return sigma; });
  }
  return t;
}

std::vector<std::vector<int>> simple_roots(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    out.push_back(v);
  }
  return out;
}

Table make_table_f4() {
  const auto all = simple_roots(4);
  return make_exceptional(7, "F4", Series::F, 4,
                          {
                              {1, 3, k10_01, all},
                              {1, 3, k01_11, all},
                              {1, 4, k01_11, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
                              {2, 3, k10_11, all},
                              {2, 3, k01_11, all},
                              {2, 4, k01_11, all},
                              {3, 4, k10_11, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}},
                          });
}

Table make_table_e6() {
  const std::vector<std::vector<int>> chain{
      {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 1}};
  const std::vector<std::vector<int>> wide{
      {1, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 1}};
  return make_exceptional(
      8, "E6", Series::E, 6,
      {
          {1, 2, k10_01, chain},
          {1, 2, k10_11, {{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}}},
          {1, 3, {{0, 1}, {1, 2}}, chain},
          {1, 5, k10_11, {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}}},
          {1, 6, k10_01, wide},
          {1, 6, k10_11, wide},
          {2, 3, k10_01, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}},
          {2, 3, {{0, 1}, {1, 2}}, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}}},
      });
}

Table make_table_e7() {
  const std::vector<std::vector<int>> chain{{1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0},
                                            {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 1}};
  const std::vector<std::vector<int>> five{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0, 0},
                                           {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}};
  const auto all = simple_roots(7);
  return make_exceptional(9, "E7", Series::E, 7,
                          {
                              {1, 2, k10_01, chain},
                              {1, 2, {{0, 1}, {1, 2}}, chain},
                              {1, 5, k10_11, all},
                              {2, 3, k10_01, five},
                              {2, 4, {{0, 1}, {1, 3}}, all},
                              {2, 5, k10_01, all},
                              {2, 6, {{0, 1}, {1, 2}}, five},
                              {2, 7, k01_11, chain},
                              {3, 7, k01_11, five},
                          });
}

Table make_table_e8() {
  const std::vector<std::vector<int>> chain{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0},
                                            {0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 0},
                                            {0, 0, 0, 0, 0, 0, 1, 1}};
  const std::vector<std::vector<int>> five{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0},
                                           {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}};
  const auto all = simple_roots(8);
  return make_exceptional(10, "E8", Series::E, 8,
                          {
                              {1, 2, k10_01, chain},
                              {1, 3, {{0, 1}, {1, 3}}, chain},
                              {1, 5, k10_11, all},
                              {2, 3, k10_01, five},
                              {2, 5, k10_01, all},
                              {2, 5, {{0, 1}, {1, 3}}, all},
                              {2, 7, {{0, 1}, {1, 2}}, five},
                              {2, 8, k01_11, chain},
                              {3, 8, k01_11, five},
                          });
}

std::vector<Table> build_tables() {
  return {make_table1(), make_table2(), make_table_a(), make_table_b(), make_table_c(),
          make_table_d(), make_table_f4(), make_table_e6(), make_table_e7(), make_table_e8()};
}

template <class V>
std::string show(const V& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_params(const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const std::vector<Table>& all_tables() {
  static const std::vector<Table> tables = build_tables();
  return tables;
}

const Table& table(int id) {
  if (id < 1 || id > static_cast<int>(all_tables().size()))
    throw Error(ErrorKind::InvalidInput, "no table " + std::to_string(id));
  return all_tables()[id - 1];
}

int table_id(const std::string& key) {
  for (const auto& t : all_tables())
    if (t.name == key || std::to_string(t.id) == key) return t.id;
  throw Error(ErrorKind::InvalidInput, "no table '" + key + "'");
}

RowInstance instantiate_row(const TableRow& row, int n, const Params& params) {
  auto admissible = row.admits(n) ? row.params(n) : std::vector<Params>{};
  if (std::find(admissible.begin(), admissible.end(), params) == admissible.end())
    throw Error(ErrorKind::ParamsOutOfRange, "row " + std::to_string(row.table_id) + "." + std::to_string(row.row_id) +
                                                 " does not admit n=" + std::to_string(n) + " params " +
                                                 show_params(params));
  RowInstance inst;
  for (int p : params) inst.complement.push_back(p - 1);
  inst.psi = row.psi;
  std::sort(inst.psi.begin(), inst.psi.end());
  inst.rank = row.rank(n, params);
  inst.sigma = sorted(row.sigma(n, params));
  return inst;
}

std::vector<TableMatch> find_table_matches(const SubgroupDatum& h, const std::vector<int>& table_ids) {
  const LeviDatum& levi = h.levi();
  const RootSystem& rs = levi.roots();
  const int n = rs.rank();
  IndexSet all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (n == 0) return {};
  auto comps = classify_diagram(rs, all);
  if (comps.size() != 1) return {};

  std::vector<DiagramComponent> views{comps[0]};
  if (comps[0].type == CartanType{Series::B, 2})
    views.push_back({{Series::C, 2}, {comps[0].nodes[1], comps[0].nodes[0]}});

  std::vector<TableMatch> out;
  for (const auto& view : views) {
    for (const auto& g : diagram_automorphisms(view.type)) {
      std::vector<int> phi(n);
      for (int j = 0; j < n; ++j) phi[view.nodes[j]] = g[j];
      Params comp;
      for (int c : levi.complement()) comp.push_back(phi[c] + 1);
      std::sort(comp.begin(), comp.end());
      std::vector<CRoot> psi;
      for (const auto& c : h.psi()) {
        Weight full = levi.lift(c);
        CRoot r = CRoot::zero(comp.size());
        for (int i = 0; i < n; ++i)
          if (full[i] != 0) {
            auto pos = std::find(comp.begin(), comp.end(), phi[i] + 1) - comp.begin();
            r[pos] = full[i];
          }
        psi.push_back(r);
      }
      std::sort(psi.begin(), psi.end());

      for (int id : table_ids)
        for (const auto& row : table(id).rows) {
          if (row.series != view.type.series || !row.admits(n)) continue;
          auto ps = row.params(n);
          if (std::find(ps.begin(), ps.end(), comp) == ps.end()) continue;
          RowInstance inst = instantiate_row(row, n, comp);
          if (inst.psi != psi) continue;
          TableMatch m{&row, n, comp, phi, inst.rank, {}};
          for (const auto& s : inst.sigma) {
            Weight w = Weight::zero(n);
            for (int i = 0; i < n; ++i) w[i] = s[phi[i]];
            m.sigma.push_back(w);
          }
          std::sort(m.sigma.begin(), m.sigma.end());
          out.push_back(std::move(m));
        }
    }
  }
  return out;
}

namespace {

TableMatch unique_match(const SubgroupDatum& h, const std::vector<int>& ids, ErrorKind missing) {
  auto ms = find_table_matches(h, ids);
  if (ms.empty()) throw Error(missing, "no table row matches the datum");
  for (const auto& m : ms)
    if (m.sigma != ms.front().sigma || m.rank != ms.front().rank)
      throw Error(ErrorKind::InvariantViolation, "rows " + std::to_string(ms.front().row->table_id) + "." +
                                                     std::to_string(ms.front().row->row_id) + " and " +
                                                     std::to_string(m.row->table_id) + "." +
                                                     std::to_string(m.row->row_id) + " disagree on Sigma");
  return ms.front();
}

}  // namespace

TableMatch match_leaf(const SubgroupDatum& reduced) {
  if (reduced.psi().size() != 1) throw Error(ErrorKind::UnclassifiedLeaf, "leaf must have one C-root");
  return unique_match(reduced, {1}, ErrorKind::UnclassifiedLeaf);
}

TableMatch match_table_case(const SubgroupDatum& reduced) {
  const auto np = reduced.psi().size();
  const auto nc = reduced.levi().complement().size();
  if (np == 1) return unique_match(reduced, {1}, ErrorKind::UnclassifiedCase);
  if (np == 2 && nc == 1) return unique_match(reduced, {2}, ErrorKind::UnclassifiedCase);
  if (np == 2 && nc == 2) return unique_match(reduced, {3, 4, 5, 6, 7, 8, 9, 10}, ErrorKind::UnclassifiedCase);
  throw Error(ErrorKind::UnclassifiedCase, std::to_string(np) + " C-roots on " + std::to_string(nc) +
                                               " removed simple roots");
}

}  // namespace sphroots
