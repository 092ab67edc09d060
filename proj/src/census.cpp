#include "ffpat/census.hpp"

#include <json.hpp>

#include <sstream>

namespace ffpat {

using Json = nlohmann::ordered_json;

namespace {

const char* flag(bool v) { return v ? "true" : "false"; }
const char* verdict(bool applicable, bool pass) { return !applicable ? "n/a" : pass ? "pass" : "fail"; }

template <class T>
Json array_of(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

Json matrix_of(const std::vector<std::vector<std::uint32_t>>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(array_of(r));
  return a;
}

Json bound_json(const BoundReport& b) {
  Json j;
  j["applicable"] = b.applicable;
  j["reason"] = b.reason;
  j["value"] = b.value.to_string();
  return j;
}

Json family_json(const FamilyDescriptor& d) {
  Json j;
  j["q"] = d.q;
  j["p"] = d.p;
  j["s"] = d.s;
  j["g"] = array_of(d.g);
  j["mode"] = to_string(d.kind);
  j["n"] = d.n;
  j["m"] = d.m;
  j["r"] = d.r;
  j["pivots"] = array_of(d.pivots);
  j["delta"] = to_string(d.delta);
  j["d_sum"] = to_string(d.d_sum);
  j["delta_ceiling"] = d.delta_ceiling ? Json(to_string(*d.delta_ceiling)) : Json(nullptr);
  j["d_sum_ceiling"] = to_string(d.d_sum_ceiling);
  j["rows"] = matrix_of(d.rows);
  j["alpha"] = array_of(d.alpha);
  j["s_rows"] = matrix_of(d.s_rows);
  j["s_alpha"] = array_of(d.s_alpha);
  Json layers = Json::array();
  for (const auto& l : d.layers) {
    Json e;
    e["i"] = l.i;
    e["h"] = array_of(l.modulus);
    e["theta"] = l.theta;
    layers.push_back(e);
  }
  j["layers"] = layers;
  return j;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (const char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

FamilyDescriptor describe(const LinearFamily& fam, const Tower& tower) {
  FamilyDescriptor d;
  const auto& fp = fam.field().params();
  d.q = fp.q;
  d.p = fp.p;
  d.s = fp.s;
  d.g = fp.g;
  d.kind = fam.kind();
  d.n = fam.n();
  d.m = fam.m();
  d.r = fam.r();
  d.pivots = fam.pivots();
  d.delta = fam.delta();
  d.d_sum = fam.d_sum();
  d.delta_ceiling = fam.delta_ceiling();
  d.d_sum_ceiling = fam.d_sum_ceiling();
  d.rows = fam.input_rows();
  d.alpha = fam.input_alpha();
  d.s_rows = fam.s_rows();
  d.s_alpha = fam.s_alpha();
  for (unsigned i = 1; i <= std::min(tower.max_degree(), fam.n()); ++i) {
    const ExtCtx& ctx = tower.layer(i);
    d.layers.push_back({i, ctx.field->modulus(), to_string(ctx.theta)});
  }
  return d;
}

bool CensusReport::passed() const {
  if (!total_ok || !split_ok) return false;
  if (discr.applicable && !discr_pass) return false;
  for (const auto& row : rows) {
    if (discr.applicable && !row.discr_pass) return false;
    if (!asserted()) continue;
    if (row.fp1.applicable && !row.fp1_pass) return false;
    if (row.fp2.applicable && !row.fp2_pass) return false;
  }
  return true;
}

CensusReport run_census(const LinearFamily& fam, const Tower& tower, std::uint64_t budget, unsigned workers) {
  CensusReport rep;
  rep.family = describe(fam, tower);
  const FamilyTally tally = tally_family(fam, budget, workers);
  const std::uint32_t q = fam.field().q();
  rep.discr = bound_nonsquarefree(fam);
  rep.split_ok = true;
  for (std::size_t k = 0; k < tally.patterns.size(); ++k) {
    CensusRow row;
    row.lambda = tally.patterns[k];
    row.tally = tally.rows[k];
    row.expected = expected_count(fam, row.lambda);
    row.deviation = abs(Rational(BigInt(row.tally.count)) - row.expected);
    row.fp1 = bound_fp1(fam, row.lambda);
    row.fp2 = bound_fp2(fam, row.lambda);
    row.fp1_pass = bound_holds(row.fp1, BigInt(row.tally.count), row.expected, q);
    row.fp2_pass = bound_holds(row.fp2, BigInt(row.tally.count), row.expected, q);
    row.discr_pass = Rational(BigInt(row.tally.nsq)) <= rep.discr.value.rational_part;
    rep.split_ok = rep.split_ok && row.tally.sq + row.tally.nsq == row.tally.count;
    rep.totals += row.tally;
    rep.expected_total += row.expected;
    rep.rows.push_back(std::move(row));
  }
  rep.total_ok = BigInt(rep.totals.count) == fam.size();
  rep.discr_pass = Rational(BigInt(rep.totals.nsq)) <= rep.discr.value.rational_part;
  return rep;
}

CensusReport run_census(const LinearFamily& fam, std::uint64_t budget, unsigned workers) {
  const Tower tower(fam.field_ptr(), fam.n());
  return run_census(fam, tower, budget, workers);
}

bool CorrespondenceReport::passed() const {
  if (!scan.passed()) return false;
  for (const auto& row : rows) {
    if (!row.result.ok) return false;
  }
  return true;
}

CorrespondenceReport run_verify(const LinearFamily& fam, const Tower& tower, std::uint64_t budget, unsigned workers) {
  CorrespondenceReport rep;
  rep.family = describe(fam, tower);
  rep.scan = verify_correspondence(tower, fam.n(), budget, workers);
  for (const auto& lambda : enumerate_patterns(fam.n())) {
    rep.rows.push_back({lambda, pattern_weight(lambda), verify_membership(fam, tower, lambda, budget)});
  }
  return rep;
}

CorrespondenceReport run_verify(const LinearFamily& fam, std::uint64_t budget, unsigned workers) {
  const Tower tower(fam.field_ptr(), fam.n());
  return run_verify(fam, tower, budget, workers);
}

bool VarietyReport::passed() const {
  for (const auto& row : rows) {
    if (!row.identity_pass) return false;
    if (row.jacobian.in_scope && !row.jacobian.passed()) return false;
  }
  return true;
}

VarietyReport run_variety(const LinearFamily& fam, const Tower& tower, std::uint64_t budget, unsigned workers) {
  VarietyReport rep;
  rep.family = describe(fam, tower);
  const FamilyTally tally = tally_family(fam, kDefaultMemberBudget, workers);
  for (const auto& lambda : enumerate_patterns(fam.n())) {
    const SymSystem sys(fam, tower, lambda);
    VarietyRow row;
    row.lambda = lambda;
    row.w = pattern_weight(lambda);
    row.common_degree = sys.common_degree();
    row.points = count_points(sys, tally, budget, workers);
    row.identity_pass = row.points.identity_holds(row.w);
    row.jacobian = jacobian_probe(sys, budget, workers);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

VarietyReport run_variety(const LinearFamily& fam, std::uint64_t budget, unsigned workers) {
  const Tower tower(fam.field_ptr(), fam.n());
  return run_variety(fam, tower, budget, workers);
}

BoundsReport run_bounds(const LinearFamily& fam) {
  BoundsReport rep;
  const Tower tower(fam.field_ptr(), fam.n());
  rep.family = describe(fam, tower);
  for (const auto& lambda : enumerate_patterns(fam.n())) {
    rep.rows.push_back({lambda, expected_count(fam, lambda), bound_fp1(fam, lambda), bound_fp2(fam, lambda)});
  }
  rep.discr = bound_nonsquarefree(fam);
  return rep;
}

std::string to_csv(const CensusReport& rep) {
  std::ostringstream os;
  os << "lambda,count,sq,nsq,expected,deviation,fp1_applicable,fp1_pass,fp2_applicable,fp2_pass,discr_pass\n";
  const bool asserted = rep.asserted();
  for (const auto& row : rep.rows) {
    const bool a1 = asserted && row.fp1.applicable;
    const bool a2 = asserted && row.fp2.applicable;
    os << row.lambda.to_string() << ',' << row.tally.count << ',' << row.tally.sq << ',' << row.tally.nsq << ','
       << to_string(row.expected) << ',' << to_string(row.deviation) << ',' << flag(a1) << ','
       << verdict(a1, row.fp1_pass) << ',' << flag(a2) << ',' << verdict(a2, row.fp2_pass) << ','
       << verdict(rep.discr.applicable, row.discr_pass) << '\n';
  }
  os << "total," << rep.totals.count << ',' << rep.totals.sq << ',' << rep.totals.nsq << ','
     << to_string(rep.expected_total) << ','
     << to_string(abs(Rational(BigInt(rep.totals.count)) - rep.expected_total)) << ",false,n/a,false,n/a,"
     << verdict(rep.discr.applicable, rep.discr_pass) << '\n';
  return os.str();
}

std::string to_json(const CensusReport& rep) {
  Json j;
  j["report"] = "census";
  j["family"] = family_json(rep.family);
  j["asserted"] = rep.asserted();
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["lambda"] = row.lambda.to_string();
    r["count"] = row.tally.count;
    r["sq"] = row.tally.sq;
    r["nsq"] = row.tally.nsq;
    r["expected"] = to_string(row.expected);
    r["deviation"] = to_string(row.deviation);
    Json f1 = bound_json(row.fp1);
    f1["pass"] = verdict(rep.asserted() && row.fp1.applicable, row.fp1_pass);
    Json f2 = bound_json(row.fp2);
    f2["pass"] = verdict(rep.asserted() && row.fp2.applicable, row.fp2_pass);
    r["fp1"] = f1;
    r["fp2"] = f2;
    r["discr_pass"] = verdict(rep.discr.applicable, row.discr_pass);
    rows.push_back(r);
  }
  j["rows"] = rows;
  Json t;
  t["count"] = rep.totals.count;
  t["sq"] = rep.totals.sq;
  t["nsq"] = rep.totals.nsq;
  t["expected"] = to_string(rep.expected_total);
  t["size_matches"] = rep.total_ok;
  t["split_matches"] = rep.split_ok;
  Json d = bound_json(rep.discr);
  d["pass"] = verdict(rep.discr.applicable, rep.discr_pass);
  t["discr"] = d;
  j["totals"] = t;
  j["passed"] = rep.passed();
  return dump(j);
}

std::string to_csv(const CorrespondenceReport& rep) {
  std::ostringstream os;
  os << "check,lambda,value,pass\n";
  const auto& l = rep.scan;
  os << "scan_pairs,," << l.pairs << ",n/a\n";
  os << "scan_pattern_mismatches,," << l.pattern_mismatches << ',' << verdict(true, l.pattern_mismatches == 0) << '\n';
  os << "scan_squarefree_checked,," << l.squarefree_checked << ",n/a\n";
  os << "scan_fiber_mismatches,," << l.fiber_mismatches << ',' << verdict(true, l.fiber_mismatches == 0) << '\n';
  os << "scan_stray_fibers,," << l.stray_fibers << ',' << verdict(true, l.stray_fibers == 0) << '\n';
  for (const auto& row : rep.rows) {
    const std::string lam = row.lambda.to_string();
    os << "type_points," << lam << ',' << row.result.type_lambda_points << ",n/a\n";
    os << "in_family," << lam << ',' << row.result.in_family << ',' << verdict(true, row.result.ok) << '\n';
  }
  return os.str();
}

std::string to_json(const CorrespondenceReport& rep) {
  Json j;
  j["report"] = "correspondence";
  j["family"] = family_json(rep.family);
  const auto& l = rep.scan;
  Json lj;
  lj["q"] = l.q;
  lj["n"] = l.n;
  lj["pairs"] = l.pairs;
  lj["pattern_mismatches"] = l.pattern_mismatches;
  lj["squarefree_checked"] = l.squarefree_checked;
  lj["fiber_mismatches"] = l.fiber_mismatches;
  lj["stray_fibers"] = l.stray_fibers;
  Json nsq = Json::object();
  for (const auto& [lam, hist] : l.nonsquarefree_fibers) {
    Json h = Json::object();
    for (const auto& [size, count] : hist) h[std::to_string(size)] = count;
    nsq[lam] = h;
  }
  lj["nonsquarefree_fibers"] = nsq;
  lj["counterexamples"] = array_of(l.counterexamples);
  lj["passed"] = l.passed();
  j["scan"] = lj;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["lambda"] = row.lambda.to_string();
    r["w"] = to_string(row.w);
    r["type_lambda_points"] = row.result.type_lambda_points;
    r["in_family"] = row.result.in_family;
    r["pass"] = row.result.ok;
    r["counterexample"] = row.result.counterexample ? array_of(*row.result.counterexample) : Json(nullptr);
    rows.push_back(r);
  }
  j["membership"] = rows;
  j["passed"] = rep.passed();
  return dump(j);
}

std::string to_csv(const VarietyReport& rep) {
  std::ostringstream os;
  os << "lambda,w,common_degree,v_total,v_eq,v_neq,a_sq,a_nsq,identity_pass,jacobian_scope,jacobian_points,"
        "jacobian_deficient,jacobian_counterexamples,jacobian_pass\n";
  for (const auto& row : rep.rows) {
    const auto& p = row.points;
    const auto& jr = row.jacobian;
    os << row.lambda.to_string() << ',' << to_string(row.w) << ',' << row.common_degree << ',' << p.v_total << ','
       << p.v_eq << ',' << p.v_neq << ',' << p.a_sq << ',' << p.a_nsq << ',' << verdict(true, row.identity_pass)
       << ',' << (jr.in_scope ? "asserted" : "informational") << ',' << jr.points << ',' << jr.deficient << ','
       << jr.counterexamples << ',' << verdict(jr.in_scope, jr.passed()) << '\n';
  }
  return os.str();
}

std::string to_json(const VarietyReport& rep) {
  Json j;
  j["report"] = "variety";
  j["family"] = family_json(rep.family);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    const auto& p = row.points;
    const auto& jr = row.jacobian;
    Json r;
    r["lambda"] = row.lambda.to_string();
    r["w"] = to_string(row.w);
    r["common_degree"] = row.common_degree;
    r["v_total"] = p.v_total;
    r["v_eq"] = p.v_eq;
    r["v_neq"] = p.v_neq;
    r["a_sq"] = p.a_sq;
    r["a_nsq"] = p.a_nsq;
    r["identity_pass"] = row.identity_pass;
    Json jj;
    jj["in_scope"] = jr.in_scope;
    jj["scope_note"] = jr.scope_note;
    jj["points"] = jr.points;
    jj["full_rank"] = jr.full_rank;
    jj["deficient"] = jr.deficient;
    jj["counterexamples"] = jr.counterexamples;
    jj["max_distinct_deficient"] = jr.max_distinct_deficient;
    Json ex = Json::array();
    for (const auto& x : jr.examples) ex.push_back(array_of(x));
    jj["examples"] = ex;
    jj["pass"] = verdict(jr.in_scope, jr.passed());
    r["jacobian"] = jj;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["passed"] = rep.passed();
  return dump(j);
}

std::string to_csv(const BoundsReport& rep) {
  std::ostringstream os;
  os << "lambda,expected,fp1_applicable,fp1_bound,fp1_reason,fp2_applicable,fp2_bound,fp2_reason\n";
  for (const auto& row : rep.rows) {
    os << row.lambda.to_string() << ',' << to_string(row.expected) << ',' << flag(row.fp1.applicable) << ','
       << row.fp1.value.to_string() << ',' << csv_field(row.fp1.reason) << ',' << flag(row.fp2.applicable) << ','
       << row.fp2.value.to_string() << ',' << csv_field(row.fp2.reason) << '\n';
  }
  os << "discr,," << flag(rep.discr.applicable) << ',' << rep.discr.value.to_string() << ',' << csv_field(rep.discr.reason)
     << ",,,\n";
  return os.str();
}

std::string to_json(const BoundsReport& rep) {
  Json j;
  j["report"] = "bounds";
  j["family"] = family_json(rep.family);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["lambda"] = row.lambda.to_string();
    r["expected"] = to_string(row.expected);
    r["fp1"] = bound_json(row.fp1);
    r["fp2"] = bound_json(row.fp2);
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["discr"] = bound_json(rep.discr);
  return dump(j);
}

}  // namespace ffpat
