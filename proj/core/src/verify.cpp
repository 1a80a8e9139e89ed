#include "blocklab/verify.hpp"

#include <chrono>

#include "blocklab/catalog.hpp"
#include "blocklab/group_algebra.hpp"
#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

uint64_t xnext(uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

void run_check(VerifyRun& run, const std::string& name, const std::function<std::string()>& body) {
  Stopwatch sw;
  CheckResult r;
  r.name = name;
  try {
    std::string detail = body();
    if (detail.rfind("skipped", 0) == 0) {
      r.skipped = true;
      r.passed = true;
    } else {
      r.passed = true;
    }
    r.detail = detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.millis = sw.millis();
  run.checks.push_back(std::move(r));
}

GroupAlgebraElem random_augzero(const AbelianPGroup& P, uint64_t& state) {
  GroupAlgebraElem x(P);
  int terms = 2 + (int)(xnext(state) % 5);
  for (int t = 0; t < terms; ++t) {
    long g = (long)(xnext(state) % (uint64_t)P.order());
    long c = (long)(xnext(state) % 9) - 4;
    x.add_term(P.element_at(g), c);
    x.add_term(P.identity(), -c);  // keep augmentation zero
  }
  return x;
}

}  // namespace

QciAlgebra::Elem random_qci_element(const QciAlgebra& a, uint64_t& state) {
  std::map<QciAlgebra::Mono, GRElem> terms;
  std::vector<QciAlgebra::Mono> basis = a.basis();
  int want = std::min<long>((long)basis.size(), 6);
  for (int t = 0; t < want; ++t) {
    const auto& m = basis[xnext(state) % basis.size()];
    long c = (long)(xnext(state) % (uint64_t)a.ring().size());
    terms[m] = a.ring().from_index(c);
  }
  return a.from_terms(std::move(terms));
}

void radical_power_suite(const AbelianPGroup& P, int samples, uint64_t seed) {
  uint64_t state = seed ? seed : 1;
  int n = P.exponents().empty() ? 1 : P.exponents()[0];
  for (int s = 0; s < samples; ++s) {
    GroupAlgebraElem x = random_augzero(P, state);
    RadicalPowerSplit split = radical_power_split(x, n);
    if (split.p2_case && split.x_outside_j2 && !split.y_outside_j2)
      throw VerificationError("p = 2 radical split left the outside-J2 locus");
  }
}

VerifyRun verify_block(const BlockSpec& spec, const VerifyOptions& opt) {
  VerifyRun run;
  std::string dir = opt.out_dir + "/" + spec.name;

  run_check(run, spec.name + ": action analysis", [&] {
    PAction act = spec.l_action();
    ActionDecomposition dec = decompose(act);
    for (const auto& f : dec.factors)
      if (f.nontrivial_action) frattini_action(f.induced, true);
    fixed_char_exists(act);
    if (opt.write_reports) write_report(dir, "action.json", action_report(spec));
    return "factors=" + std::to_string(dec.factors.size()) + " t=" + std::to_string(dec.t);
  });

  run_check(run, spec.name + ": coefficient ring identities", [&] {
    int checked = 0;
    for (int n = 1; ipow(spec.p, n) <= 27; ++n) {
      Cyclotomic prod = one_minus_root_product(spec.p, n);
      if (!prod.is_rational() || prod.rational_value() != spec.p)
        throw VerificationError("product of (1 - roots) is not p at n = " + std::to_string(n));
      ++checked;
    }
    // 1 - omega in pO exactly when p = 2 and omega = -1
    for (int k = 1; k <= 3 && ipow(spec.p, k) <= 125; ++k) {
      long pk = ipow(spec.p, k);
      PrimeIdeal prime(spec.p, pk);
      for (long a = 1; a < pk; ++a) {
        if (gcd_long(a, pk) != 1) continue;
        Cyclotomic x = Cyclotomic::one(pk) - Cyclotomic::root_of_unity(pk, a);
        bool inside = prime.in_power_of_p(x, 1);
        bool expected = (spec.p == 2 && pk == 2 && a == 1);
        if (inside != expected)
          throw VerificationError("1 - root membership in pO wrong at order " +
                                  std::to_string(pk));
      }
    }
    return "products=" + std::to_string(checked);
  });

  BlockData data;
  run_check(run, spec.name + ": block characters", [&] {
    data = compute_block(spec);
    if (data.group->g.size() <= 600) {
      for (size_t i = 0; i < data.irr.size(); ++i)
        for (size_t j = i; j < data.irr.size(); ++j) {
          Cyclotomic ip = data.irr[i].induced.inner(data.irr[j].induced);
          bool ok = (i == j) ? (ip.is_rational() && ip.rational_value() == 1) : ip.is_zero();
          if (!ok) throw VerificationError("block characters fail orthogonality");
        }
    }
    if (opt.write_reports) {
      write_report(dir, "characters.json", characters_report(data));
      write_report(dir, "decomposition.json", decomposition_report(data));
    }
    return "irr=" + std::to_string(data.irr.size()) +
           " ibr=" + std::to_string(data.irr_e.size());
  });
  if (!run.checks.back().passed) return run;  // downstream checks need the data

  run_check(run, spec.name + ": decomposition consistency", [&] {
    // det(Cartan) must be a power of p
    long ne = (long)data.irr_e.size();
    ZMat c(ne, ZVec(ne));
    for (long i = 0; i < ne; ++i)
      for (long j = 0; j < ne; ++j) c[i][j] = data.cartan[i][j];
    SmithResult s = smith_normal_form(c);
    mpz_class det = 1;
    for (long i = 0; i < ne; ++i) det *= s.d[i][i];
    if (det == 0) throw VerificationError("Cartan matrix is singular");
    mpz_class rest = det;
    while (rest % spec.p == 0) rest /= spec.p;
    if (rest != 1 && rest != -1)
      throw VerificationError("det(Cartan) is not a power of p: " + det.get_str());
    single_brauer_subset(data);
    return "detC=" + det.get_str();
  });

  run_check(run, spec.name + ": radical powers", [&] {
    if (spec.defect.is_trivial()) return std::string("skipped (trivial defect group)");
    radical_power_suite(spec.defect, opt.radical_samples, opt.seed);
    return "samples=" + std::to_string(opt.radical_samples);
  });

  run_check(run, spec.name + ": induced-character integrality", [&] {
    PrimeIdeal prime(spec.p, data.exp_g());
    uint64_t state = opt.seed ? opt.seed : 1;
    const FiniteGroup& G = data.group->g;
    for (const auto& elems : {data.group->d_elements(), data.group->dz_elements()}) {
      SubgroupView nv = subgroup_view(G, elems);
      std::vector<ClassFunction> irr_n = character_table(nv.group);
      for (int trial = 0; trial < 8; ++trial) {
        ClassFunction combo = irr_n[0].scaled(0);
        for (int pick = 0; pick < 3; ++pick) {
          long idx = (long)(xnext(state) % irr_n.size());
          long coeff = (long)(xnext(state) % 5) - 2;
          combo = combo + irr_n[idx].scaled(mpq_class(coeff));
        }
        induction_integrality(G, nv, combo, prime);
      }
    }
    return "N in {D, DxZ}, 8 virtual characters each";
  });

  IsometryGroup isos;
  bool have_isos = false;
  run_check(run, spec.name + ": perfect self-isometries", [&] {
    if ((int)data.irr.size() > opt.max_irr)
      return "skipped (|Irr(B)| = " + std::to_string(data.irr.size()) + " exceeds bound " +
             std::to_string(opt.max_irr) + ")";
    isos = enumerate_self_isometries(data, opt.max_irr, opt.jobs);
    have_isos = true;
    return "group order " + std::to_string(isos.members.size()) + " of " +
           std::to_string(isos.candidates_considered) + " candidates";
  });

  BlockSpec d1_spec;
  BlockData d1_block;
  run_check(run, spec.name + ": picard report", [&] {
    d1_spec = sub_block_spec_d1(data);
    d1_block = compute_block(d1_spec);
    PicardReport rep = picard_report(data, d1_block, have_isos ? &isos : nullptr);
    auto brute = abelian_aut_order_brute(data.d2_abs, 1L << 22);
    if (brute && *brute != rep.linear_factor.aut_order)
      throw VerificationError("Aut(D2) formula disagrees with brute force");
    if (opt.write_reports) {
      write_report(dir, "picard.json", picard_to_json(rep));
      write_file(dir + "/picard.txt", picard_text_summary(rep));
      if (have_isos)
        write_report(dir, "isometries.json", isometries_report(data, d1_block, isos));
    }
    return "linear factor order " + std::to_string(rep.linear_factor.order);
  });

  run_check(run, spec.name + ": q-matrix and basic algebra", [&] {
    if (!spec.inertial->one_simple_module())
      return std::string("skipped (more than one simple module)");
    QMatrixData q = compute_q_matrix(data);
    QPropertyReport props = verify_q_properties(q, spec.p);
    if (!props.all())
      throw VerificationError("q-matrix properties failed: " +
                              (props.violations.empty() ? "?" : props.violations.front()));
    QciAlgebra strict(spec.p, 1, q, QciMode::strict);
    if (strict.basis_size() != spec.defect.order())
      throw VerificationError("monomial basis size differs from |D|");
    uint64_t state = opt.seed ? opt.seed : 1;
    for (int i = 0; i < opt.triple_samples; ++i) {
      auto a = random_qci_element(strict, state);
      auto b = random_qci_element(strict, state);
      auto c = random_qci_element(strict, state);
      if (!(strict.mul(strict.mul(a, b), c) == strict.mul(a, strict.mul(b, c))))
        throw VerificationError("associativity failed in the strict model");
    }
    for (int g = 0; g < strict.num_generators(); ++g)
      if (!strict.is_zero(strict.pow(strict.generator(g), strict.cap(g))))
        throw VerificationError("generator power relation failed");
    // subalgebra closure for the trivially acted factors
    for (int g = 0; g < strict.num_generators(); ++g) {
      if (strict.in_t_prefix(g)) continue;
      for (long e1 = 0; e1 < strict.cap(g); ++e1)
        for (long e2 = 0; e2 < strict.cap(g); ++e2) {
          auto prod = strict.mul(strict.pow(strict.generator(g), e1),
                                 strict.pow(strict.generator(g), e2));
          for (const auto& [m, cf] : prod.terms)
            for (int i = 0; i < strict.num_generators(); ++i)
              if (i != g && m[i] != 0)
                throw VerificationError("power span of a trivially acted generator not closed");
        }
    }
    ScanReport scan = t_invariance_scan(strict, opt.scan_budget, opt.seed, opt.jobs);
    if (scan.t_violations != 0)
      throw VerificationError("an automorphism moved the T ideal (strict model)");
    ScanReport p2_scan;
    bool have_p2 = false;
    if (spec.p == 2) {
      bool d1_elab = true;
      for (int i = 0; i < q.t; ++i)
        if (q.nexp[i] != 1) d1_elab = false;
      if (d1_elab && q.t > 0) {
        QciAlgebra a_i(2, 2, q, QciMode::p2);
        for (int i = 0; i < opt.triple_samples; ++i) {
          auto a = random_qci_element(a_i, state);
          auto b = random_qci_element(a_i, state);
          auto c = random_qci_element(a_i, state);
          if (!(a_i.mul(a_i.mul(a, b), c) == a_i.mul(a, a_i.mul(b, c))))
            throw VerificationError("associativity failed in the squared-generator model");
        }
        p2_scan = t_invariance_scan(a_i, opt.scan_budget, opt.seed, opt.jobs);
        if (p2_scan.t_violations != 0)
          throw VerificationError("an automorphism moved the T ideal (squared model)");
        have_p2 = true;
      }
    }
    if (opt.write_reports)
      write_report(dir, "qci.json",
                   qci_report(data, q, props, scan, have_p2 ? &p2_scan : nullptr));
    return "generators=" + std::to_string(strict.num_generators()) +
           " scanned=" + std::to_string(scan.tuples_checked) +
           (scan.exhaustive ? " (exhaustive)" : "");
  });

  run_check(run, spec.name + ": duality", [&] {
    if (!spec.inertial->one_simple_module())
      return std::string("skipped (more than one simple module)");
    DualityData d = duality_iso(*spec.inertial, spec.phi_exponent);
    return "L order " + std::to_string(d.l_reps.size());
  });

  return run;
}

VerifyRun verify_global(const VerifyOptions& opt) {
  VerifyRun run;

  run_check(run, "global: cyclotomic product identities", [&] {
    const std::pair<long, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
    for (auto [p, n] : cases) {
      Cyclotomic prod = one_minus_root_product(p, n);
      if (!prod.is_rational() || prod.rational_value() != p)
        throw VerificationError("product identity failed at (" + std::to_string(p) + "," +
                                std::to_string(n) + ")");
    }
    return "6 cases";
  });

  run_check(run, "global: 1 - root membership boundary", [&] {
    for (long p : {2L, 3L, 5L}) {
      for (int k = 1; k <= 3; ++k) {
        long pk = ipow(p, k);
        PrimeIdeal prime(p, pk);
        for (long a = 1; a < pk; ++a) {
          if (gcd_long(a, p) != 1) continue;
          Cyclotomic x = Cyclotomic::one(pk) - Cyclotomic::root_of_unity(pk, a);
          bool inside = prime.in_power_of_p(x, 1);
          bool expected = (p == 2 && pk == 2);
          if (inside != expected)
            throw VerificationError("membership boundary wrong at p=" + std::to_string(p) +
                                    " order " + std::to_string(pk));
        }
      }
    }
    return "p in {2,3,5}, orders up to p^3";
  });

  run_check(run, "global: action battery", [&] {
    auto actions = action_catalog();
    for (auto& [name, act] : actions) {
      ActionDecomposition dec = decompose(act);
      fixed_char_exists(act);
      for (const auto& f : dec.factors)
        if (f.nontrivial_action) frattini_action(f.induced, true);
      if (act.group().order() <= 16) {
        auto brute = brute_force_decompose(act);
        if (!brute) throw VerificationError("brute-force decomposition unavailable");
        if (brute->factors.size() != dec.factors.size() || brute->t != dec.t)
          throw VerificationError("decomposition disagrees with brute force on " + name);
      }
    }
    return std::to_string(actions.size()) + " actions";
  });

  run_check(run, "global: automorphism group orders", [&] {
    int compared = 0;
    for (const auto& g : group_catalog()) {
      auto brute = abelian_aut_order_brute(g, 1L << 22);
      if (!brute) continue;
      if (*brute != abelian_aut_order(g))
        throw VerificationError("Aut order formula mismatch");
      ++compared;
    }
    return std::to_string(compared) + " groups compared";
  });

  run_check(run, "global: radical powers over the group catalog", [&] {
    for (const auto& g : group_catalog()) radical_power_suite(g, opt.radical_samples, opt.seed);
    return std::to_string(group_catalog().size()) + " groups";
  });

  run_check(run, "global: Galois ring fields", [&] {
    for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
      GaloisRing field(p, 1, d);
      // every nonzero element invertible
      for (long i = 1; i < field.size(); ++i) {
        GRElem x = field.from_index(i);
        if (!field.is_unit(x)) throw VerificationError("field has a nonzero non-unit");
        GRElem y = field.inverse(x);
        if (!(field.mul(x, y) == field.one()))
          throw VerificationError("field inverse failed");
      }
    }
    return "fields up to order 81";
  });

  return run;
}

}  // namespace blocklab
