#include "farey/json_io.hpp"

namespace farey {

Json tree_node_json(const TreeNode& node, TreeVariant variant) {
    Json j;
    j["variant"] = variant_name(variant);
    j["level"] = node.level;
    if (variant == TreeVariant::Forward)
        j["label"] = node.label.digits;
    else
        j["branchWord"] = node.branch_word;
    j["p"] = poly_coeff_strings(node.fn.p);
    j["q"] = poly_coeff_strings(node.fn.q);
    return j;
}

std::string convergent_component(const Rat& v) {
    if (rat_is_integer(v)) return v.get_num().get_str();
    return rat_string(v);
}

Json expansion_json(const DigitExpansion& exp, const std::vector<Convergent>& convs) {
    Json j;
    j["digits"] = exp.digits;
    j["status"] = status_name(exp.status);
    if (exp.status == ExpansionStatus::CertifiedInfinite) j["reason"] = reason_name(exp.reason);
    j["steps"] = exp.steps;
    Json cs = Json::array();
    for (const Convergent& c : convs)
        cs.push_back(Json::array({convergent_component(c.p), convergent_component(c.q)}));
    j["convergents"] = cs;
    return j;
}

Json case_result_json(const verify::CaseResult& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json suite_report_json(const verify::SuiteReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["passed"] = rep.passed();
    j["failed"] = rep.failed();
    Json cases = Json::array();
    for (const verify::CaseResult& c : rep.cases) cases.push_back(case_result_json(c));
    j["cases"] = cases;
    return j;
}

Json complex_root_json(const ComplexApprox& r) {
    Json j;
    j["re"] = r.re;
    j["im"] = r.im;
    j["radius"] = r.radius;
    return j;
}

Json isolating_interval_json(const IsolatingInterval& iv) {
    Json j;
    j["lo"] = rat_string(iv.lo);
    j["hi"] = rat_string(iv.hi);
    j["approx"] = iv.midpoint().get_d();
    return j;
}

Json poly_roots_json(const IntPoly& f, const Rat& eps, double tol) {
    Json j;
    j["poly"] = poly_coeff_strings(f);
    RootIsolation iso = isolate_real_roots(f);
    j["squareFree"] = iso.input_square_free;
    Json reals = Json::array();
    for (IsolatingInterval iv : iso.intervals)
        reals.push_back(isolating_interval_json(refine(iso.square_free_part, iv, eps)));
    j["realRoots"] = reals;
    ComplexRoots cr = complex_roots(f, tol);
    j["complexConverged"] = cr.converged;
    Json cs = Json::array();
    for (const ComplexApprox& r : cr.roots) cs.push_back(complex_root_json(r));
    j["complexRoots"] = cs;
    return j;
}

Json interlace_report_json(const InterlaceReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    Json checks;
    checks["pSquareFree"] = rep.p_square_free;
    checks["qSquareFree"] = rep.q_square_free;
    checks["pFullyReal"] = rep.p_fully_real;
    checks["qFullyReal"] = rep.q_fully_real;
    checks["noSharedRoots"] = rep.no_shared_roots;
    checks["alternating"] = rep.alternating;
    checks["r1NonPositive"] = rep.r1_nonpositive;
    checks["snLeMinusOne"] = rep.sn_le_minus_one;
    j["checks"] = checks;
    j["mergedRoots"] = rep.merged;
    return j;
}

Json density_trace_json(const DensityTrace& trace) {
    Json j;
    j["status"] = density_status_name(trace.status);
    j["zetasIncreasing"] = trace.zetas_increasing;
    j["bTailGeTwo"] = trace.b_tail_ge_two;
    j["finalGapUpper"] = trace.final_gap_upper.get_d();
    Json steps = Json::array();
    for (const DensityStep& s : trace.steps) {
        Json row;
        row["i"] = s.index;
        row["b"] = s.b;
        row["zetaLo"] = s.zeta_lo.get_d();
        row["zetaHi"] = s.zeta_hi.get_d();
        row["gapUpper"] = s.gap_upper.get_d();
        row["fractionalPart"] = s.fractional_part.get_d();
        steps.push_back(row);
    }
    j["steps"] = steps;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace farey
