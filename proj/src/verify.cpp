#include "treehardy/verify.hpp"

#include <algorithm>
#include <cmath>

#include "treehardy/random.hpp"
#include "treehardy/schur.hpp"

namespace treehardy {

namespace {

void add(std::vector<VerifyRecord>& out, const std::string& suite,
         const std::string& name, const std::string& law, double residual,
         double threshold) {
    out.push_back({suite, name, law, residual, threshold, residual <= threshold});
}

void add_flag(std::vector<VerifyRecord>& out, const std::string& suite,
              const std::string& name, const std::string& law, bool ok) {
    out.push_back({suite, name, law, ok ? 0.0 : 1.0, 0.5, ok});
}

HardySeries gamma_bar_minus(const KElement& c) {
    return HardySeries{{-c, KElement::one()}};
}

void tree_suite(const RunConfig& config, std::vector<VerifyRecord>& out) {
    const std::string suite = "tree";
    // Exhaustive triple checks stay cheap up to depth 4.
    const FiniteTree tree(config.q, std::min(config.depth, 4));
    const int n = tree.node_count();

    double count_residual = 0.0;
    long expected = 0;
    long power = 1;
    for (int d = 0; d <= tree.depth(); ++d, power *= config.q) expected += power;
    count_residual = std::abs(static_cast<double>(n - expected));
    add(out, suite, "node count matches the geometric sum", "homogeneous-tree",
        count_residual, 0.0);

    Eigen::MatrixXi dist(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist(i, j) = tree.dist(tree.node(i), tree.node(j));

    bool metric_ok = true;
    for (int i = 0; i < n && metric_ok; ++i) {
        if (dist(i, i) != 0) metric_ok = false;
        for (int j = 0; j < n && metric_ok; ++j) {
            if (dist(i, j) != dist(j, i) || (i != j && dist(i, j) <= 0))
                metric_ok = false;
            for (int k = 0; k < n; ++k)
                if (dist(i, j) > dist(i, k) + dist(k, j)) {
                    metric_ok = false;
                    break;
                }
        }
    }
    add_flag(out, suite, "dist is a metric (exhaustive)", "tree-distance", metric_ok);

    bool meet_ok = true;
    bool order_ok = true;
    for (int i = 0; i < n && meet_ok && order_ok; ++i)
        for (int j = 0; j < n; ++j) {
            const NodeId &s = tree.node(i), &t = tree.node(j);
            const NodeId v = tree.meet(s, t);
            const size_t len = std::min(s.word.size(), t.word.size());
            size_t common = 0;
            while (common < len && s.word[common] == t.word[common]) ++common;
            if (v.word != std::vector<int>(s.word.begin(), s.word.begin() + common))
                meet_ok = false;
            const bool both = tree.leq(s, t) && tree.leq(t, s);
            if (both != tree.same_horocycle(s, t)) order_ok = false;
        }
    add_flag(out, suite, "meet is the longest common word prefix", "tree-meet",
             meet_ok);
    add_flag(out, suite, "mutual order equals horocycle equivalence",
             "horocycle-order", order_ok);

    bool parent_ok = true;
    for (int i = 1; i < n; ++i) {
        const NodeId& t = tree.node(i);
        const auto p = tree.parent(t);
        if (!p || tree.dist(*p, t) != 1 || !tree.leq(*p, t) || tree.leq(t, *p))
            parent_ok = false;
    }
    add_flag(out, suite, "parent is one step up in the partial order",
             "upward-shift", parent_ok);
}

void cuntz_suite(const RunConfig& config, std::vector<VerifyRecord>& out) {
    const std::string suite = "cuntz";
    const FiniteTree tree(config.q, config.depth);
    const CuntzReport report = cuntz_residuals(tree, config.depth - 1);
    add(out, suite, "alpha_i alphabar_j = delta_ij", "cuntz-relations",
        report.box_residual, 1e-12);
    add(out, suite, "sum_i alphabar_i alpha_i = 1", "cuntz-relations",
        report.sum_residual, 1e-12);
    add(out, suite, "gammabar = q^{-1/2} sum_i alphabar_i", "upward-shift-decomposition",
        report.shift_sum_residual, 1e-12);
    add(out, suite, "gamma gammabar = 1", "upward-shift-decomposition",
        report.left_inverse_residual, 1e-12);
    add(out, suite, "gammabar is isometric below the truncation edge",
        "shift-isometry", report.isometry_residual, 1e-12);
}

void projection_suite(const RunConfig& config, RandomSource& rng,
                      std::vector<VerifyRecord>& out) {
    const std::string suite = "projections";
    const FiniteTree tree(config.q, config.depth);
    const int d = tree.depth();

    double idem = 0.0, ortho = 0.0, telescope = 0.0, commute = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const TreeVector f = rng.dense_vector(tree);
        for (int m = 0; m + 1 <= d; ++m) {
            const TreeVector wm = apply_omega(m, f);
            idem = std::max(idem, max_abs_on_depth_range(apply_omega(m, wm) - wm,
                                                         m + 1, d));
            for (int k = 0; k + 1 <= d; ++k) {
                if (k == m) continue;
                ortho = std::max(
                    ortho, max_abs_on_depth_range(apply_omega(k, wm),
                                                  std::max(m, k) + 1, d));
            }
            if (m + 2 <= d)
                commute = std::max(
                    commute,
                    max_abs_on_depth_range(
                        apply_gamma_bar(wm) - apply_omega(m + 1, apply_gamma_bar(f)),
                        m + 2, d));
        }
        TreeVector partial = TreeVector::zero(tree);
        for (int m = 0; m <= d; ++m) {
            partial = partial + apply_omega(m, f);
            telescope = std::max(
                telescope,
                (partial - (f - apply_sigma(m + 1, f))).values.lpNorm<Eigen::Infinity>());
        }
    }
    add(out, suite, "omega_m omega_n = delta_mn omega_n", "orthogonal-decomposition",
        ortho, 1e-12);
    add(out, suite, "omega_m is idempotent", "orthogonal-decomposition", idem, 1e-12);
    add(out, suite, "partial sums telescope to 1 - sigma_{n+1}",
        "orthogonal-decomposition", telescope, 1e-12);
    add(out, suite, "gammabar omega_m = omega_{m+1} gammabar", "shift-intertwining",
        commute, 1e-12);

    // gammabar maps each W_m isometrically into W_{m+1}.
    double isometry = 0.0, range = 0.0;
    for (int m = 0; m + 1 <= d - 1; ++m) {
        for (int t : tree.level(m + 1)) {
            const TreeVector x = apply_omega(m, TreeVector::basis(tree, t));
            const TreeVector y = apply_gamma_bar(x);
            isometry = std::max(isometry, std::abs(y.norm() - x.norm()));
            range = std::max(range, max_abs_on_depth_range(
                                        apply_omega(m + 1, y) - y, m + 2, d));
        }
    }
    add(out, suite, "gammabar is isometric from W_m onto W_{m+1}",
        "shift-intertwining", std::max(isometry, range), 1e-12);
}

void decomposition_suite(const RunConfig& config, RandomSource& rng,
                         std::vector<VerifyRecord>& out) {
    const std::string suite = "decomposition";
    const FiniteTree tree(config.q, std::min(config.depth, 4));

    const SeriesCoefficients id_coeffs = decompose(TreeOperator::identity(tree));
    bool id_ok = id_coeffs.diagonals.size() == 1;
    if (id_ok) {
        const auto& [key, diag] = *id_coeffs.diagonals.begin();
        id_ok = key.out_word.empty() && key.in_word.empty() &&
                static_cast<int>(diag.size()) == tree.node_count();
        for (const auto& [u, v] : diag) id_ok = id_ok && v == Complex{1.0, 0.0};
    }
    add_flag(out, suite, "identity decomposes to the empty word pair",
             "series-decomposition", id_ok);

    const TreeOperator updown = TreeOperator::materialize(
        tree, [](const TreeVector& f) { return apply_alpha_bar(1, apply_alpha(2, f)); });
    const SeriesCoefficients ud = decompose(updown);
    bool ud_ok = ud.diagonals.size() == 1;
    if (ud_ok) {
        const auto& [key, diag] = *ud.diagonals.begin();
        ud_ok = key.out_word == std::vector<int>{1} &&
                key.in_word == std::vector<int>{2};
        long expected = 0;
        for (int dd = 1; dd <= tree.depth(); ++dd)
            expected += static_cast<long>(tree.level(dd).size()) / tree.q();
        ud_ok = ud_ok && static_cast<long>(diag.size()) == expected;
        for (const auto& [u, v] : diag) {
            ud_ok = ud_ok && tree.node(u).word.back() == 2 && v == Complex{1.0, 0.0};
        }
    }
    add_flag(out, suite, "alphabar_1 alpha_2 has a single all-ones coefficient",
             "series-decomposition", ud_ok);

    double round_trip = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const TreeOperator s = rng.sparse_operator(tree, 3 * tree.node_count());
        round_trip = std::max(round_trip, reconstruct(decompose(s)).max_entry_diff(s));
    }
    add(out, suite, "reconstruct inverts decompose entrywise",
        "series-decomposition", round_trip, 1e-14);
}

void block_suite(const RunConfig& config, RandomSource& rng,
                 std::vector<VerifyRecord>& out) {
    const std::string suite = "blocks";
    const FiniteTree tree(config.q, config.depth);
    const int d = tree.depth();
    const int degree = std::max(0, std::min(config.degree, d - 2));
    const int max_prefix = std::max(1, d - degree - 1);
    const bool recoverable = d - degree - 1 >= 1;

    double block = 0.0, lower = 0.0, round_trip = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const HardySeries s = rng.hs_series(degree, max_prefix);
        const TreeOperator op = series_to_operator(s, tree);
        for (int n = 0; n + 1 <= d; ++n) {
            for (int m = 0; m <= d; ++m) {
                const int k = m - n;
                if (k >= 0 && n + 1 > d - k) continue;
                const int td = n + 1;
                const int t = tree.level(td)[rep % tree.level(td).size()];
                const TreeVector x = apply_omega(n, TreeVector::basis(tree, t));
                const TreeVector lhs = apply_omega(m, op.apply(x));
                if (k < 0) {
                    lower = std::max(lower, lhs.norm());
                    continue;
                }
                TreeVector rhs = s.coeff(k).at(n) * x;
                for (int j = 0; j < k; ++j) rhs = apply_gamma_bar(rhs);
                block = std::max(block, (lhs - rhs).norm());
            }
        }
        if (recoverable) {
            const HardySeries back = operator_to_series(op, degree, 1e-10);
            round_trip = std::max(round_trip, series_dist(back, s));
        }
    }
    add(out, suite, "omega_m S omega_n = gammabar^{m-n} omega_n s_{m-n,n}",
        "block-law", block, 1e-12);
    add(out, suite, "omega_m S omega_n = 0 below the diagonal", "block-law", lower,
        1e-12);
    if (recoverable)
        add(out, suite, "series coefficients recovered from the operator",
            "series-coefficient-recovery", round_trip, 1e-12);

    // Powers beyond the depth give the zero operator, which classifies as
    // vacuously causal; keep the monomials representable.
    const int max_power = std::min(2, d);
    for (int nn = 0; nn <= max_power; ++nn)
        for (int mm = 0; mm <= max_power; ++mm) {
            const TreeOperator w = TreeOperator::shift_monomial(tree, nn, mm);
            const bool causal = is_causal(w).causal;
            const bool stationary = stationarity_classes(w).stationary;
            add_flag(out, suite,
                     "gammabar^" + std::to_string(nn) + " gamma^" + std::to_string(mm) +
                         " causal iff " + std::to_string(nn) + ">=" + std::to_string(mm),
                     "causality-criterion", causal == (nn >= mm));
            add_flag(out, suite,
                     "gammabar^" + std::to_string(nn) + " gamma^" + std::to_string(mm) +
                         " is stationary",
                     "entry-class-stationarity", stationary);
        }

    // A diagonal with two distinct values on one horocycle is not stationary.
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int i = 0; i < tree.node_count(); ++i)
        trip.emplace_back(i, i, Complex{1.0, 0.0});
    trip.emplace_back(tree.level(1)[0], tree.level(1)[0], Complex{1.0, 0.0});
    const TreeOperator perturbed = TreeOperator::from_triplets(tree, trip);
    const StationarityReport report = stationarity_classes(perturbed);
    add_flag(out, suite, "perturbed diagonal flagged non-stationary",
             "entry-class-stationarity", !report.stationary && report.max_spread > 0.1);
}

void norm_suite(const RunConfig& config, RandomSource& rng,
                std::vector<VerifyRecord>& out) {
    const std::string suite = "norms";
    const FiniteTree tree(config.q, config.depth);
    const int d = tree.depth();
    const int degree = std::max(0, std::min(config.degree, d - 2));
    const int td = d - degree;

    double coeff_norm = 0.0, omega = 0.0, parseval = 0.0, contraction = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const HardySeries s = rng.hs_series(degree, td);
        const int t = tree.level(td)[rep % tree.level(td).size()];
        for (int n = 0; n + 1 <= td; ++n) {
            const NormIdentityReport r = norm_identities(s, tree, tree.node(t), n);
            coeff_norm = std::max(coeff_norm, r.coeff_norm_residual);
            omega = std::max(omega, r.omega_residual);
            parseval = std::max(parseval, r.parseval_residual);
        }
        contraction = std::max(
            contraction,
            operator_norm_estimate(series_to_operator(s, tree)) - h2_norm(s));
    }
    add(out, suite, "coefficient sums match scaled projection norms",
        "series-norm-identity", coeff_norm, 1e-10);
    add(out, suite, "||omega_n chi_t||^2 = 1/q^n - 1/q^{n+1}", "projection-norm",
        omega, 1e-10);
    add(out, suite, "weighted projection sums equal (1-1/q)||S||_2^2",
        "hilbert-schmidt-bridge", parseval, 1e-10);
    add(out, suite, "truncated operator norm bounded by ||S||_2",
        "contractive-containment", std::max(contraction, 0.0), 1e-10);
}

void kalgebra_suite(const RunConfig& config, RandomSource& rng,
                    std::vector<VerifyRecord>& out) {
    const std::string suite = "constants";
    (void)config;
    double hom = 0.0, mono = 0.0, bracket = 0.0, rho = 0.0, inv = 0.0, sqrt_r = 0.0;
    bool canonical = true;
    for (int rep = 0; rep < 20; ++rep) {
        const KElement a = rng.kelement();
        const KElement b = rng.kelement();
        hom = std::max(hom, k_dist(k_shift(a * b, 1), k_shift(a, 1) * k_shift(b, 1)));
        mono = std::max(mono, k_norm_inf(k_shift(a, 1)) - k_norm_inf(a));
        for (int n = 0; n <= 32; n += 8)
            bracket = std::max(
                bracket, k_dist(k_bracket(a, n + 1), k_bracket(a, n) * k_shift(a, n)));
        rho = std::max(rho, std::abs(k_rho(a) - k_rho_estimate(a, 64)));

        const KElement k = rng.invertible_kelement();
        inv = std::max(inv, k_dist(k_invert(k_invert(k)), k));
        const KElement pos = k_conj(k) * k;
        const KElement root = k_sqrt(pos);
        sqrt_r = std::max(sqrt_r, k_dist(root * root, pos));

        // Unique representation: rebuilding from components gives the same
        // canonical form.
        std::vector<Complex> padded;
        for (int m = 0; m < a.prefix_size() + 3; ++m) padded.push_back(a.at(m));
        canonical = canonical && KElement{padded, a.tail()} == a;
    }
    add(out, suite, "left shift is an algebra homomorphism", "constants-algebra",
        hom, 1e-15);
    add(out, suite, "left shift does not increase the sup norm",
        "constants-algebra", std::max(mono, 0.0), 0.0);
    add(out, suite, "window products satisfy the shift recursion",
        "constants-algebra", bracket, 1e-12);
    add(out, suite, "closed-form spectral radius matches the estimator",
        "spectral-radius", rho, 0.05);
    add(out, suite, "inversion is an involution on invertibles",
        "constants-algebra", inv, 1e-14);
    add(out, suite, "principal square roots square back", "constants-algebra",
        sqrt_r, 1e-14);
    add_flag(out, suite, "canonical form is unique", "constants-algebra", canonical);
}

void point_eval_suite(const RunConfig& config, RandomSource& rng,
                      std::vector<VerifyRecord>& out) {
    const std::string suite = "point-eval";
    const int degree = std::max(config.degree, 1);

    double linearity = 0.0, product_rule = 0.0, shift_rule = 0.0, conjugation = 0.0, recovery = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(0, degree));
        const HardySeries g = rng.hs_series(rng.uniform_int(0, degree));
        const KElement p = rng.kelement();
        const KElement q = rng.kelement();
        const KElement c = rng.kelement();

        linearity = std::max(linearity, k_dist(point_eval(f * p + g * q, c),
                                     point_eval(f, c) * p + point_eval(g, c) * q));
        product_rule = std::max(
            product_rule, k_dist(point_eval(series_mul(f, g), c),
                         point_eval(series_mul(HardySeries::constant(point_eval(f, c)),
                                               g),
                                    c)));
        const int n = rng.uniform_int(0, 3);
        shift_rule = std::max(shift_rule,
                        k_dist(point_eval(series_mul(HardySeries::monomial(
                                                         n, KElement::one()),
                                                     f),
                                          c),
                               k_bracket(c, n) * point_eval(f, k_shift(c, n))));
        const KElement k = rng.invertible_kelement();
        const KElement modified = k_shift(k, 1) * k_invert(k) * c;
        conjugation = std::max(
            conjugation, k_dist(point_eval(series_mul(HardySeries::constant(k), f), c),
                         point_eval(f, modified) * k));

        recovery = std::max(recovery, k_dist(point_eval(f, KElement::zero()),
                                             f.coeff(0)));
        for (int j = 0; j <= f.degree(); ++j) {
            const KElement ek = KElement::indicator(j);
            recovery = std::max(
                recovery, k_dist(point_eval(f, ek) - f.coeff(0), ek * f.coeff(1)));
        }
    }
    add(out, suite, "evaluation is right-linear over the constants",
        "point-evaluation-linearity", linearity, 1e-12);
    add(out, suite, "(FG)(c) = (F(c) G)(c)", "point-evaluation-product", product_rule,
        1e-12);
    add(out, suite, "(gammabar^n F)(c) = c^[n] F(c^(n))", "point-evaluation-shift",
        shift_rule, 1e-12);
    add(out, suite, "(k F)(c) = F(k^(1) k^{-1} c) k", "point-evaluation-conjugation",
        conjugation, 1e-12);
    add(out, suite, "coefficients recovered from evaluations at indicators",
        "point-evaluation-uniqueness", recovery, 1e-12);
}

void bezout_suite(const RunConfig& config, RandomSource& rng,
                  std::vector<VerifyRecord>& out) {
    const std::string suite = "division";
    const int degree = std::max(config.degree, 1);
    double coeff = 0.0, eval = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(1, degree));
        const KElement c = rng.kelement();
        const HardySeries g = bezout_div(f, c);
        const HardySeries lhs = f - HardySeries::constant(point_eval(f, c));
        coeff = std::max(coeff, series_dist(lhs, series_mul(gamma_bar_minus(c), g)));
        eval = std::max(eval, k_norm_inf(point_eval(lhs, c)));
    }
    add(out, suite, "F - F(c) = (gammabar - c) G at the coefficient level",
        "division-identity", coeff, 1e-13);
    add(out, suite, "F - F(c) vanishes at c", "division-identity", eval, 1e-12);
}

void kernel_suite(const RunConfig& config, RandomSource& rng,
                  std::vector<VerifyRecord>& out) {
    const std::string suite = "kernel";
    const int degree = std::max(config.degree, 1);
    double repro = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(0, degree));
        const KElement c = rng.kelement();
        const KElement k = rng.k2element();
        const KernelResult kc = kernel(c, config.tol);
        const Complex lhs = k2_inner(point_eval(f, c), k);
        const Complex rhs = h2_inner(f, series_mul(kc.series, HardySeries::constant(k)));
        repro = std::max(repro, std::abs(lhs - rhs));
    }
    add(out, suite, "[F(c), k] = [F, K_c k]", "reproducing-kernel", repro, 1e-10);

    bool trivial = kernel(KElement::zero(), config.tol).series.degree() == 0;
    add_flag(out, suite, "K_0 = 1", "reproducing-kernel", trivial);
}

void blaschke_suite(const RunConfig& config, RandomSource& rng,
                    std::vector<VerifyRecord>& out) {
    const std::string suite = "blaschke";

    // Constant points reduce to the classical factor (z - a)/(1 - conj(a) z);
    // its Taylor coefficients are -a and (1 - |a|^2) conj(a)^{n-1}.
    const double alpha = 0.5;
    const BlaschkeResult constant = blaschke(KElement::constant(alpha), config.tol);
    double taylor = k_dist(constant.b.coeff(0), KElement::constant(-alpha));
    double power = 1.0;
    for (int n = 1; n <= constant.b.degree(); ++n) {
        taylor = std::max(taylor, k_dist(constant.b.coeff(n),
                                         KElement::constant((1 - alpha * alpha) *
                                                            power)));
        power *= alpha;
    }
    add(out, suite, "constant case matches the classical Taylor coefficients",
        "blaschke-taylor", taylor, 1e-12);

    // Hand-expanded finite example: a = prefix [0.5], tail 0.
    const KElement a_fin{{Complex{0.5, 0.0}}, Complex{}};
    const BlaschkeResult fin = blaschke(a_fin, config.tol);
    double fin_residual = k_dist(fin.kaa, KElement{{Complex{1.25, 0.0}},
                                                   Complex{1.0, 0.0}});
    fin_residual = std::max(
        fin_residual, k_dist(fin.l, KElement{{Complex{0.8, 0.0}}, Complex{1.0, 0.0}}));
    fin_residual = std::max(
        fin_residual,
        k_dist(fin.b.coeff(0),
               KElement{{Complex{-0.5 * std::sqrt(0.8), 0.0}}, Complex{}}));
    fin_residual = std::max(fin_residual, k_dist(fin.b.coeff(1), k_sqrt(fin.l)));
    fin_residual = std::max(fin_residual, k_norm_inf(fin.b.coeff(2)));
    add(out, suite, "finite-prefix example matches its hand expansion",
        "blaschke-taylor", fin_residual, 1e-12);

    double kaa_identity = 0.0, vanish = 0.0, isometry = 0.0, multbound = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const KElement a = rng.kelement();
        const BlaschkeResult r = blaschke(a, config.tol);
        kaa_identity = std::max(
            kaa_identity,
            k_dist(r.kaa, KElement::one() + k_conj(a) * a * k_shift(r.kaa, 1)));
        vanish = std::max(vanish, k_norm_inf(point_eval(r.b, a)));
        for (int m = 0; m <= 3; ++m) {
            const KElement p = rng.k2element();
            const KElement q = rng.k2element();
            const Complex lhs =
                h2_inner(series_mul(r.b, HardySeries::monomial(m, p)),
                         series_mul(r.b, HardySeries::constant(q)));
            const Complex rhs = m == 0 ? k2_inner(p, q) : Complex{};
            isometry = std::max(isometry, std::abs(lhs - rhs));
        }

        const HardySeries s = rng.hs_series(rng.uniform_int(0, config.degree));
        const HardySeries f = rng.hs_series(rng.uniform_int(0, config.degree));
        multbound = std::max(multbound, h2_norm(series_mul(s, f)) -
                                            h2_norm(s) * h2_norm(f));
    }
    add(out, suite, "K_a(a) = 1 + conj(a) a K_a(a)^(1)", "kernel-recursion",
        kaa_identity, 1e-12);
    add(out, suite, "B_a vanishes at a under evaluation", "blaschke-vanishing",
        vanish, 1e-10);
    add(out, suite, "multiplication by B_a is isometric", "blaschke-isometry",
        isometry, 1e-8);
    add(out, suite, "||SF||_2 <= ||S||_2 ||F||_2 for square-summable factors",
        "multiplier-norm-bound", std::max(multbound, 0.0), 1e-10);
}

void schur_suite(const RunConfig& config, RandomSource& rng,
                 std::vector<VerifyRecord>& out) {
    const std::string suite = "schur";

    double hermitian = 0.0;
    double bmin = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const KElement a = rng.kelement();
        const HardySeries b = blaschke(a, config.tol).b;
        std::vector<KElement> points, vectors;
        for (int j = 0; j < 3; ++j) {
            points.push_back(rng.kelement());
            vectors.push_back(rng.k2element());
        }
        const Eigen::MatrixXcd g = gram(b, points, vectors, config.tol);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j)
                hermitian = std::max(hermitian, std::abs(g(i, j) - std::conj(g(j, i))));
        bmin = std::min(bmin, is_psd(g, config.tol_eig).min_eigenvalue);
    }
    add(out, suite, "Gram matrices are Hermitian", "kernel-positivity", hermitian,
        1e-12);
    add(out, suite, "Blaschke multipliers yield nonnegative Gram matrices",
        "kernel-positivity", std::max(-bmin, 0.0), config.tol_eig);

    // An expansive multiplier is caught: 2 gammabar at constant points 0.7.
    const HardySeries two_shift =
        HardySeries::monomial(1, KElement::constant(2.0));
    const std::vector<KElement> pts{KElement::constant(0.7)};
    const std::vector<KElement> vecs{KElement::indicator(0)};
    const PsdReport expansive = is_psd(gram(two_shift, pts, vecs, config.tol),
                                       config.tol_eig);
    add_flag(out, suite, "expansive multiplier yields a negative eigenvalue",
             "kernel-positivity", expansive.min_eigenvalue < 0.0 && !expansive.psd);

    // Against the unreduced kernel: K_0(c, d) = (K_d)(c).
    double unreduced = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const KElement c = rng.kelement();
        const KElement d = rng.kelement();
        unreduced = std::max(
            unreduced, k_dist(schur_kernel(HardySeries::zero(), c, d, config.tol),
                              point_eval(kernel(d, config.tol).series, c)));
    }
    add(out, suite, "S = 0 reduces to the unreduced kernel", "kernel-positivity",
        unreduced, 1e-10);
}

void interpolation_suite(const RunConfig& config, RandomSource& rng,
                         std::vector<VerifyRecord>& out) {
    const std::string suite = "interpolation";

    InterpolationProblem problem;
    problem.tol = config.tol;
    problem.inv_threshold = config.inv_threshold;
    for (int j = 0; j < 3; ++j) problem.points.push_back(rng.kelement());
    const InterpolationSolution solution = interpolate(problem);

    double direct = 0.0;
    for (double r : solution.residuals) direct = std::max(direct, r);
    add(out, suite, "the Blaschke product vanishes at every point",
        "interpolation-vanishing", direct, 1e-8);

    double vanish = 0.0, preserve = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const HardySeries g = rng.hs_series(rng.uniform_int(0, config.degree));
        const HardySeries bg = series_mul(solution.blaschke_product, g);
        for (const KElement& c : problem.points)
            vanish = std::max(vanish, k_norm_inf(point_eval(bg, c)));
        preserve = std::max(preserve, std::abs(h2_norm(bg) - h2_norm(g)));
    }
    add(out, suite, "(BG)(c_j) = 0 for square-summable G",
        "interpolation-vanishing", vanish, 1e-8);
    add(out, suite, "||BG||_2 = ||G||_2", "interpolation-isometry", preserve, 1e-8);

    // One point at the origin gives the bare upward shift.
    InterpolationProblem at_zero;
    at_zero.points.push_back(KElement::zero());
    const InterpolationSolution zero_solution = interpolate(at_zero);
    add(out, suite, "a single point at 0 yields B = gammabar",
        "interpolation-vanishing",
        series_dist(zero_solution.blaschke_product,
                    HardySeries::monomial(1, KElement::one())),
        1e-12);

    // Repeated points force k_2 = B_c(c) = 0, which must be reported.
    InterpolationProblem repeated;
    repeated.points.push_back(KElement::constant(0.4));
    repeated.points.push_back(KElement::constant(0.4));
    bool breakdown = false;
    try {
        interpolate(repeated);
    } catch (const RecursionBreakdownError&) {
        breakdown = true;
    }
    add_flag(out, suite, "repeated points report recursion breakdown",
             "recursion-breakdown", breakdown);

    // The modified points are exactly the conjugation rule for evaluation.
    double consistent = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        const KElement k = rng.invertible_kelement();
        const HardySeries f = rng.hs_series(rng.uniform_int(0, config.degree));
        const KElement c = rng.kelement();
        consistent = std::max(
            consistent,
            k_dist(point_eval(series_mul(HardySeries::constant(k), f), c),
                   point_eval(f, k_shift(k, 1) * k_invert(k) * c) * k));
    }
    add(out, suite, "modified points agree with the conjugation rule",
        "point-evaluation-conjugation", consistent, 1e-12);
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.q < 2) throw InvalidParameterError("config: q must be >= 2");
    if (config.depth < 1) throw InvalidParameterError("config: depth must be >= 1");
    if (config.degree < 0) throw InvalidParameterError("config: degree must be >= 0");
    if (config.tol <= 0.0 || config.tol_eig <= 0.0 || config.inv_threshold <= 0.0)
        throw InvalidParameterError("config: tolerances must be positive");
}

std::vector<VerifyRecord> run_verification(const RunConfig& config) {
    validate(config);
    RandomSource rng(config.seed);
    std::vector<VerifyRecord> records;
    tree_suite(config, records);
    cuntz_suite(config, records);
    projection_suite(config, rng, records);
    decomposition_suite(config, rng, records);
    block_suite(config, rng, records);
    norm_suite(config, rng, records);
    kalgebra_suite(config, rng, records);
    point_eval_suite(config, rng, records);
    bezout_suite(config, rng, records);
    kernel_suite(config, rng, records);
    blaschke_suite(config, rng, records);
    schur_suite(config, rng, records);
    interpolation_suite(config, rng, records);
    return records;
}

}  // namespace treehardy
