#include "blocklab/spec_io.hpp"

#include <filesystem>
#include <fstream>

#include "blocklab/numutil.hpp"

namespace blocklab {

BlockSpec parse_spec(const Json& j) {
  BlockSpec s;
  try {
    s.name = j.value("name", "unnamed");
    s.p = j.at("p").get<long>();
    if (!is_prime(s.p)) throw SpecError("'p' is not prime");
    std::vector<int> exps;
    for (long order : j.at("defect").get<std::vector<long>>()) {
      if (order < 2) throw SpecError("defect orders must be >= 2");
      int e = 0;
      long o = order;
      while (o % s.p == 0) {
        o /= s.p;
        ++e;
      }
      if (o != 1) throw SpecError("defect order " + std::to_string(order) +
                                  " is not a power of p");
      exps.push_back(e);
    }
    for (size_t i = 0; i + 1 < exps.size(); ++i)
      if (exps[i] < exps[i + 1])
        throw SpecError("defect orders must be listed in descending order");
    s.defect = AbelianPGroup(s.p, exps);

    const Json& in = j.at("inertial");
    InertialPresentation pres;
    pres.gen_orders = in.value("orders", std::vector<long>{});
    pres.power_z = in.value("power_z", std::vector<long>(pres.gen_orders.size(), 0));
    pres.z_order = in.value("z_order", 1L);
    if (in.contains("commutator_z")) {
      pres.commutator = in.at("commutator_z").get<std::vector<std::vector<long>>>();
    } else {
      pres.commutator.assign(pres.gen_orders.size(),
                             std::vector<long>(pres.gen_orders.size(), 0));
    }
    s.inertial = std::make_shared<InertialGroup>(std::move(pres));

    if (j.contains("action"))
      for (const auto& m : j.at("action")) s.action.push_back(m.get<ActionMatrix>());
    s.phi_exponent = j.value("phi", 0L);

    if (j.contains("limits")) {
      const Json& lim = j.at("limits");
      s.limits.seed = lim.value("seed", (uint64_t)1);
      s.limits.max_irr = lim.value("max_irr", 8);
      s.limits.scan_budget = lim.value("scan_budget", 200000L);
      s.limits.jobs = lim.value("jobs", 1);
    }
  } catch (const Json::exception& e) {
    throw SpecError(std::string("malformed spec file: ") + e.what());
  }
  s.validate();
  return s;
}

BlockSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw SpecError(std::string("spec file is not valid JSON: ") + e.what());
  }
  return parse_spec(j);
}

Json spec_to_json(const BlockSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["p"] = spec.p;
  std::vector<long> orders;
  for (int i = 0; i < spec.defect.rank(); ++i) orders.push_back(spec.defect.modulus(i));
  j["defect"] = orders;
  const auto& pres = spec.inertial->presentation();
  j["inertial"] = Json{{"orders", pres.gen_orders},
                       {"power_z", pres.power_z},
                       {"commutator_z", pres.commutator},
                       {"z_order", pres.z_order}};
  j["action"] = spec.action;
  j["phi"] = spec.phi_exponent;
  j["limits"] = Json{{"seed", spec.limits.seed},
                     {"max_irr", spec.limits.max_irr},
                     {"scan_budget", spec.limits.scan_budget},
                     {"jobs", spec.limits.jobs}};
  return j;
}

Json cyclotomic_to_json(const Cyclotomic& x) {
  Json j;
  j["conductor"] = x.conductor();
  std::vector<std::string> coords;
  for (const auto& c : x.coords()) coords.push_back(c.get_str());
  j["coords"] = coords;
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  long n = j.at("conductor").get<long>();
  std::vector<mpq_class> coords;
  for (const auto& s : j.at("coords")) coords.emplace_back(s.get<std::string>());
  for (auto& c : coords) c.canonicalize();
  return Cyclotomic::from_coords(n, std::move(coords));
}

Json characters_report(const BlockData& data) {
  const FiniteGroup& G = data.group->g;
  Json j;
  j["block"] = data.spec.name;
  j["p"] = data.spec.p;
  j["group_order"] = G.size();
  j["exponent"] = G.exponent();
  Json classes = Json::array();
  for (long c = 0; c < G.class_count(); ++c) {
    long rep = G.class_rep(c);
    Json cj;
    cj["d_part"] = data.spec.defect.element_at(data.group->d_part(rep));
    auto w = data.spec.inertial->word_at(data.group->e_part(rep));
    cj["e_part"] = Json{{"a", w.a}, {"z", w.zc}};
    cj["size"] = G.class_size(c);
    cj["p_regular"] = G.is_p_regular(rep, data.spec.p);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  Json chars = Json::array();
  for (const auto& bc : data.irr) {
    Json cj;
    cj["degree"] = bc.degree;
    cj["lambda"] = bc.lambda.a;
    cj["stabilizer_order"] = (long)bc.stabilizer.size();
    cj["chi_index"] = bc.chi_index;
    KernelFlags kf = kernel_flags(data, bc.lambda);
    cj["trivial_on_d1"] = kf.trivial_on_d1;
    cj["trivial_on_frattini_d1"] = kf.trivial_on_frattini_d1;
    Json vals = Json::array();
    for (const auto& v : bc.induced.values()) vals.push_back(cyclotomic_to_json(v));
    cj["values"] = std::move(vals);
    chars.push_back(std::move(cj));
  }
  j["characters"] = std::move(chars);
  Json ibr = Json::array();
  for (const auto& psi : data.ibr) {
    Json pj;
    pj["degree"] = psi.degree_int();
    Json vals = Json::array();
    for (long c = 0; c < G.class_count(); ++c)
      if (G.is_p_regular(G.class_rep(c), data.spec.p))
        vals.push_back(cyclotomic_to_json(psi.value(c)));
    pj["values_on_p_regular"] = std::move(vals);
    ibr.push_back(std::move(pj));
  }
  j["brauer_characters"] = std::move(ibr);
  j["decomposition_matrix"] = data.decomposition;
  j["cartan_matrix"] = data.cartan;
  return j;
}

Json decomposition_report(const BlockData& data) {
  Json j;
  j["block"] = data.spec.name;
  j["degrees"] = Json::array();
  for (const auto& bc : data.irr) j["degrees"].push_back(bc.degree);
  j["decomposition_matrix"] = data.decomposition;
  j["cartan_matrix"] = data.cartan;
  Json projs = Json::array();
  for (const auto& pr : data.projectives) projs.push_back(pr.degree_int());
  j["projective_degrees"] = std::move(projs);
  return j;
}

Json action_report(const BlockSpec& spec) {
  PAction act = spec.l_action();
  ActionDecomposition dec = decompose(act);
  Json j;
  j["block"] = spec.name;
  j["h_order"] = act.order();
  j["t"] = dec.t;
  Json factors = Json::array();
  for (const auto& f : dec.factors) {
    Json fj;
    std::vector<long> orders;
    for (int i = 0; i < f.abstract_group.rank(); ++i) orders.push_back(f.abstract_group.modulus(i));
    fj["orders"] = orders;
    fj["nontrivial_action"] = f.nontrivial_action;
    fj["basis_in_parent"] = f.sub.basis;
    if (f.nontrivial_action) {
      EigenOrbitData orbit = eigen_orbit(f.induced);
      fj["induced_order"] = orbit.h_order;
      fj["m"] = orbit.m;
      fj["eigen_char_poly"] = orbit.char_poly;
    }
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  FixedCommutatorSplit split = fixed_and_commutator(act);
  j["fixed_order"] = split.fixed.size;
  j["commutator_order"] = split.commutator.size;
  j["fixed_char_exists"] = fixed_char_exists(act);
  return j;
}

Json qci_report(const BlockData& data, const QMatrixData& q, const QPropertyReport& props,
                const ScanReport& strict_scan, const ScanReport* p2_scan) {
  Json j;
  j["block"] = data.spec.name;
  j["q_matrix"] = Json{{"root_order", q.root_order},
                       {"t", q.t},
                       {"m", q.m},
                       {"n_exp", q.nexp},
                       {"exponents", q.q_exp}};
  j["properties"] = Json{{"intra_block_trivial", props.intra_block_trivial},
                         {"antisymmetric", props.antisymmetric},
                         {"frobenius_linked", props.frobenius_linked},
                         {"trivial_rows_match_t", props.trivial_rows_match_t},
                         {"columns_separate", props.columns_separate},
                         {"violations", props.violations}};
  auto scan_json = [](const ScanReport& s) {
    return Json{{"tuples_checked", s.tuples_checked}, {"homomorphisms", s.homomorphisms},
                {"automorphisms", s.automorphisms},   {"t_violations", s.t_violations},
                {"exhaustive", s.exhaustive},         {"coverage", s.coverage},
                {"counterexamples", s.counterexamples}};
  };
  j["strict_scan"] = scan_json(strict_scan);
  if (p2_scan) j["p2_scan"] = scan_json(*p2_scan);
  return j;
}

Json isometries_report(const BlockData& data, const BlockData& d1_block,
                       const IsometryGroup& group) {
  Json j;
  j["block"] = data.spec.name;
  j["candidate_space"] = group.candidates_considered;
  j["group_order"] = (long)group.members.size();
  j["degree_prune_used"] = group.degree_prune_used;
  // a small generating set, greedily
  std::vector<SignedBijection> gens;
  {
    long n = (long)data.irr.size();
    std::vector<SignedBijection> closure{identity_isometry(n)};
    auto contains = [&](const SignedBijection& f) {
      for (const auto& m : closure)
        if (m.perm == f.perm && m.sign == f.sign) return true;
      return false;
    };
    for (const auto& cand : group.members) {
      if (contains(cand)) continue;
      gens.push_back(cand);
      // regenerate closure
      closure = {identity_isometry(n)};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<SignedBijection> snapshot = closure;
        for (const auto& a : snapshot)
          for (const auto& g : gens) {
            SignedBijection c = compose(g, a);
            if (!contains(c)) {
              closure.push_back(c);
              grew = true;
            }
          }
      }
    }
  }
  Json gj = Json::array();
  for (const auto& g : gens) gj.push_back(Json{{"perm", g.perm}, {"signs", g.sign}});
  j["generators"] = std::move(gj);
  Json members = Json::array();
  for (const auto& m : group.members) {
    Json mj;
    mj["perm"] = m.perm;
    mj["signs"] = m.sign;
    bool all_positive = true;
    for (int s : m.sign)
      if (s < 0) all_positive = false;
    auto br = sigma_br(data, m.perm);
    mj["admits_sigma_br"] = all_positive && br.has_value();
    if (all_positive && br) {
      FixedPartTwist twist = check_d2_twist(data, d1_block, m.perm);
      mj["d2_twist"] = twist.ok;
      if (twist.ok) mj["theta"] = twist.theta.a;
      mj["d1_kernel"] = check_d1_kernel(data, m.perm);
    }
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  return j;
}

Json picard_to_json(const PicardReport& r) {
  Json j;
  j["block"] = r.block_name;
  j["d2_exponents"] = r.d2_exponents;
  std::vector<long> d2_orders;
  for (int e : r.d2_exponents) {
    long o = 1;
    for (int k = 0; k < e; ++k) o *= r.p;
    d2_orders.push_back(o);
  }
  j["d2_orders"] = d2_orders;
  j["linear_factor"] = Json{{"hom_order", r.linear_factor.hom_order},
                            {"aut_order", r.linear_factor.aut_order},
                            {"order", r.linear_factor.order},
                            {"description", r.linear_factor.description}};
  j["trivial_source_specialization"] = r.trivial_source_specialization;
  j["decomposition_claim"] = r.decomposition_claim;
  j["perfect_self_isometries"] = r.perfect_self_isometries;
  j["positive_sigma_br_members"] = r.positive_sigma_br_members;
  j["d2_twist_passes"] = r.d2_twist_passes;
  j["d1_kernel_passes"] = r.d1_kernel_passes;
  j["irr_trivial_on_d1"] = r.irr_trivial_on_d1;
  return j;
}

std::string picard_text_summary(const PicardReport& r) {
  std::string s;
  s += "Picard structure report for block " + r.block_name + "\n";
  s += "  D2 shape: ";
  if (r.d2_exponents.empty()) s += "trivial";
  long pe = 1;
  for (size_t i = 0; i < r.d2_exponents.size(); ++i) {
    pe = 1;
    for (int k = 0; k < r.d2_exponents[i]; ++k) pe *= r.p;
    s += std::string(i ? " x C" : "C") + std::to_string(pe);
  }
  s += "\n";
  s += "  linear-source factor: " + r.linear_factor.description + " (order " +
       std::to_string(r.linear_factor.order) + ")\n";
  s += "  claim: " + r.decomposition_claim + "\n";
  if (r.perfect_self_isometries >= 0) {
    s += "  perfect self-isometries: " + std::to_string(r.perfect_self_isometries) + "\n";
    s += "  members admitting a Brauer permutation: " +
         std::to_string(r.positive_sigma_br_members) + " (D2-twist passes: " +
         std::to_string(r.d2_twist_passes) + ", D1-kernel passes: " +
         std::to_string(r.d1_kernel_passes) + ")\n";
  }
  return s;
}

void write_file(const std::string& path, const std::string& contents) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path);
  out << contents;
}

void write_report(const std::string& out_dir, const std::string& filename, const Json& j) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir + "/" + filename, j.dump(2) + "\n");
}

}  // namespace blocklab
