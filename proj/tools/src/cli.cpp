#include "hns/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "hns/classify.hpp"
#include "hns/core.hpp"
#include "hns/document.hpp"
#include "hns/errors.hpp"
#include "hns/tables.hpp"
#include "hns/transforms.hpp"
#include "hns/verify.hpp"

namespace hns::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : Error {
    using Error::Error;
};

/// Domain-level complaints that are not library exceptions (shape mismatches).
struct DomainError : Error {
    using Error::Error;
};

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0' || s.empty())
        throw UsageError("not a number: '" + s + "'");
    return v;
}

std::string num(double v) { return format_number(v); }

void emit_error(std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& message) {
    out << "{\"error\":{\"kind\":\"" << kind << "\",\"message\":\"" << message
        << "\"}}\n";
    err << "error: " << message << "\n";
}

std::string report_json(const IsoReport& r) {
    std::ostringstream o;
    o << "{\"passed\":" << (r.passed ? "true" : "false")
      << ",\"max_residual\":" << num(r.max_residual) << ",\"basis_residuals\":["
      << num(r.basis_residuals[0]) << "," << num(r.basis_residuals[1]) << ","
      << num(r.basis_residuals[2]) << "," << num(r.basis_residuals[3])
      << "],\"samples_checked\":" << r.samples_checked << "}";
    return o.str();
}

std::string matrix_json(const BasisTransform& t) {
    std::ostringstream o;
    o << "[[" << num(t.t11) << "," << num(t.t12) << "],[" << num(t.t21) << ","
      << num(t.t22) << "]]";
    return o.str();
}

int cmd_classify(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 1) throw UsageError("usage: classify <file>");
    const SystemDocument doc = load_system(args[0]);
    const IsoClass cls = classify(doc.constants);
    if (cls == IsoClass::NonUnital) {
        out << "{\"class\":\"NonUnital\",\"discriminant\":null,\"normal_form\":null}\n";
        return kOk;
    }
    const NormalForm nf = normal_form(doc.constants);
    out << "{\"class\":\"" << to_string(cls)
        << "\",\"discriminant\":" << num(discriminant(nf)) << ",\"normal_form\":{\"p\":"
        << num(nf.p) << ",\"q\":" << num(nf.q) << "}}\n";
    return kOk;
}

int cmd_unit(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 1) throw UsageError("usage: unit <file>");
    const SystemDocument doc = load_system(args[0]);
    const UnitSolution u = unit_element(doc.constants);
    switch (u.kind) {
        case UnitSolution::Kind::Constant:
            out << "{\"unit\":[" << num(u.value.m1) << "," << num(u.value.m2) << "]}\n";
            return kOk;
        case UnitSolution::Kind::ProbeDependent:
            out << "{\"unit\":null,\"reason\":\"probe-dependent\"}\n";
            return kDomainError;
        case UnitSolution::Kind::Degenerate:
            out << "{\"unit\":null,\"reason\":\"degenerate\"}\n";
            return kDomainError;
    }
    return kDomainError;
}

int cmd_multiply(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 5) throw UsageError("usage: multiply <file> m1 m2 n1 n2");
    const SystemDocument doc = load_system(args[0]);
    const Element u{parse_double(args[1]), parse_double(args[2])};
    const Element v{parse_double(args[3]), parse_double(args[4])};
    const Element p = multiply(doc.constants, u, v);
    out << "{\"product\":[" << num(p.m1) << "," << num(p.m2) << "]}\n";
    return kOk;
}

int cmd_family(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() >= 1 && args[0] == "five") {
        if (args.size() != 4) throw UsageError("usage: family five <a11> <a22> <b22>");
        const double a11 = parse_double(args[1]);
        const double a22 = parse_double(args[2]);
        const double b22 = parse_double(args[3]);
        SystemDocument doc{"five(a11=" + num(a11) + ",a22=" + num(a22) +
                               ",b22=" + num(b22) + ")",
                           family_5(a11, a22, b22), std::nullopt};
        out << serialize(doc) << "\n";
        return kOk;
    }
    if (args.size() >= 1 && args[0] == "sol2") {
        if (args.size() != 3) throw UsageError("usage: family sol2 <a22> <b22>");
        const double a22 = parse_double(args[1]);
        const double b22 = parse_double(args[2]);
        SystemDocument doc{"sol2(a22=" + num(a22) + ",b22=" + num(b22) + ")",
                           family_sol2(a22, b22), std::nullopt};
        out << serialize(doc) << "\n";
        return kOk;
    }
    throw UsageError("usage: family five|sol2 <params...>");
}

// Gamma5 shape: E1 is the exact unit and E1*E2 = E2.
void require_gamma5_shape(const StructuralConstants& t, const std::string& name) {
    if (!(near(t.a11, 1) && near_zero(t.b11) && near_zero(t.a12) && near(t.b12, 1)))
        throw DomainError(name + " is not gamma5-shaped (need E1*E1 = E1, E1*E2 = E2)");
    if (near_zero(t.b22))
        throw DomainError(name + " is not gamma5-shaped (need b22 != 0)");
}

void require_gamma7_shape(const StructuralConstants& t, const std::string& name) {
    if (!(near_zero(t.a12) && near_zero(t.b12) && near_zero(t.b11) && near_zero(t.a22)))
        throw DomainError(name + " is not gamma7-shaped (need a diagonal table with "
                                 "beta11 = alpha22 = 0)");
    if (near_zero(t.a11) || near_zero(t.b22))
        throw DomainError(name + " is not gamma7-shaped (need alpha11, beta22 != 0)");
}

int cmd_transform(const std::vector<std::string>& args, std::ostream& out) {
    std::vector<std::string> positional;
    std::string via = "rr";
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--via") {
            if (i + 1 >= args.size()) throw UsageError("--via needs an argument");
            via = args[++i];
        } else {
            positional.push_back(args[i]);
        }
    }
    if (positional.size() != 2 || (via != "rr" && via != "direct"))
        throw UsageError("usage: transform <src-file> <dst-file> --via rr|direct");

    const SystemDocument src = load_system(positional[0]);
    const SystemDocument dst = load_system(positional[1]);
    require_gamma5_shape(src.constants, "source");
    require_gamma7_shape(dst.constants, "target");

    // Recover the family parameters: E2*E2 = (a22*b22) E1 + b22 E2.
    const double b22 = src.constants.b22;
    const double a22 = src.constants.a22 / b22;
    const double alpha11 = dst.constants.a11;
    const double beta22 = dst.constants.b22;

    BasisTransform composite;
    if (via == "rr") {
        TransitionChain chain;
        chain.push(gamma5_to_rr(a22, b22), src.name, "R+R");
        chain.push(invert(rr_to_gamma7(alpha11, beta22, 2)), "R+R", dst.name);
        composite = chain.composite();
    } else {
        composite = gamma5_to_gamma7(a22, b22, alpha11, beta22);
    }

    const IsoReport report = verify_isomorphism(src.constants, dst.constants, composite);
    out << "{\"via\":\"" << via << "\",\"matrix\":" << matrix_json(composite)
        << ",\"report\":" << report_json(report) << "}\n";
    return report.passed ? kOk : kDomainError;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 6)
        throw UsageError("usage: verify <src-file> <dst-file> <t11> <t12> <t21> <t22>");
    const SystemDocument src = load_system(args[0]);
    const SystemDocument dst = load_system(args[1]);
    const BasisTransform t{parse_double(args[2]), parse_double(args[3]),
                           parse_double(args[4]), parse_double(args[5])};
    const IsoReport report = verify_isomorphism(src.constants, dst.constants, t);
    out << report_json(report) << "\n";
    return report.passed ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty())
            throw UsageError(
                "usage: hns classify|unit|multiply|family|transform|verify ...");
        const std::string& cmd = args[0];
        const std::vector<std::string> rest(args.begin() + 1, args.end());
        if (cmd == "classify") return cmd_classify(rest, out);
        if (cmd == "unit") return cmd_unit(rest, out);
        if (cmd == "multiply") return cmd_multiply(rest, out);
        if (cmd == "family") return cmd_family(rest, out);
        if (cmd == "transform") return cmd_transform(rest, out);
        if (cmd == "verify") return cmd_verify(rest, out);
        throw UsageError("unknown subcommand: " + cmd);
    } catch (const UsageError& e) {
        emit_error(out, err, "usage", e.what());
        return kUsageError;
    } catch (const ParseError& e) {
        emit_error(out, err, "parse", e.what());
        return kUsageError;
    } catch (const DomainError& e) {
        emit_error(out, err, "domain", e.what());
        return kDomainError;
    } catch (const Error& e) {
        emit_error(out, err, "domain", e.what());
        return kDomainError;
    }
}

}  // namespace hns::cli
