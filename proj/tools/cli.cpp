#include "appell/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "appell/families.hpp"
#include "appell/stirling.hpp"

namespace appell::cli {

namespace {

constexpr int kUsageError = 2;
constexpr int kIdentityFailed = 1;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> render_row(std::string label, const std::vector<Rational>& values) {
    std::vector<std::string> row;
    row.reserve(values.size() + 1);
    row.push_back(std::move(label));
    for (const auto& v : values) row.push_back(v.to_string());
    return row;
}

std::vector<Rational> terms_of(const EgfSequence& s) { return {s.terms().begin(), s.terms().end()}; }

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

void check_order(unsigned n, unsigned max_order, const char* what) {
    if (n > max_order)
        throw UsageError(std::string(what) + " " + std::to_string(n) + " exceeds --max-order " +
                         std::to_string(max_order));
}

struct Options {
    std::string kind = "second";
    std::string family;
    std::string identity;
    std::string t;
    std::string beta;
    std::string x;
    unsigned n = 0;
    unsigned m = 2;
    unsigned r = 1;
    unsigned max_degree = 10;
    unsigned trials = 20;
    std::uint64_t seed = 1;
    unsigned max_order = 64;
    Format format = Format::json;
};

OutputDocument stirling_doc(const Options& o) {
    check_order(o.n, o.max_order, "--n");
    OutputDocument doc{"stirling", {{"kind", o.kind}, {"n", std::to_string(o.n)}}, {}, std::nullopt};
    const auto table = o.kind == "first" ? stirling_first_table(o.n) : stirling_second_table(o.n);
    for (unsigned n = 0; n <= o.n; ++n) {
        std::vector<std::string> row;
        for (unsigned k = 0; k <= n; ++k) row.push_back((*table)[n][k].get_str());
        doc.payload.push_back(std::move(row));
    }
    return doc;
}

struct FamilyChoice {
    Rational t;
    Rational beta;
    bool euler = false;
};

FamilyChoice family_choice(const Options& o, std::ostream& err) {
    FamilyChoice c;
    if (o.family != "bernoulli" && o.family != "apostol-euler")
        throw UsageError("unknown family '" + o.family + "'");
    c.euler = o.family == "apostol-euler";
    c.t = parse_rational("t", o.t);
    if (c.euler) {
        if (o.beta.empty()) throw UsageError("--beta is required for apostol-euler");
        c.beta = parse_rational("beta", o.beta);
        if (c.beta < Rational(0) || c.beta > Rational(1))
            err << "warning: beta = " << c.beta << " lies outside [0, 1]; computing formally\n";
    } else if (!o.beta.empty()) {
        throw UsageError("--beta only applies to apostol-euler");
    }
    return c;
}

std::vector<std::pair<std::string, std::string>> family_params(const Options& o, const FamilyChoice& c) {
    std::vector<std::pair<std::string, std::string>> p{{"family", o.family}, {"t", c.t.to_string()}};
    if (c.euler) p.emplace_back("beta", c.beta.to_string());
    p.emplace_back("n", std::to_string(o.n));
    return p;
}

EgfSequence family_associated(const FamilyChoice& c, unsigned n) {
    return c.euler ? euler_associated(c.t, c.beta, n) : bernoulli_associated(c.t, n);
}

OutputDocument family_doc(const Options& o, std::ostream& err) {
    check_order(o.n, o.max_order, "--n");
    const FamilyChoice c = family_choice(o, err);
    OutputDocument doc{"family", family_params(o, c), {}, std::nullopt};
    if (!o.x.empty()) {
        const Rational x = parse_rational("x", o.x);
        doc.parameters.emplace_back("x", x.to_string());
        const Rational value = c.euler ? apostol_euler_polynomial(c.t, c.beta, o.n, x)
                                       : bernoulli_polynomial(c.t, o.n, x);
        doc.payload.push_back({"value", value.to_string()});
        return doc;
    }
    const Polynomial p = c.euler ? apostol_euler_polynomial(c.t, c.beta, o.n) : bernoulli_polynomial(c.t, o.n);
    std::vector<Rational> coeffs(o.n + 1);
    for (unsigned i = 0; i <= o.n; ++i) coeffs[i] = p.coefficient(i);
    doc.payload.push_back(render_row("coefficients", coeffs));
    doc.payload.push_back(render_row("associated", terms_of(family_associated(c, o.n))));
    return doc;
}

OutputDocument assoc_doc(const Options& o, std::ostream& err) {
    check_order(o.n, o.max_order, "--n");
    const FamilyChoice c = family_choice(o, err);
    OutputDocument doc{"assoc", family_params(o, c), {}, std::nullopt};
    const EgfSequence a = family_associated(c, o.n);
    doc.payload.push_back(render_row("associated", terms_of(a)));
    doc.payload.push_back(render_row("values-at-zero", terms_of(from_associated(a).values_at_zero())));
    return doc;
}

OutputDocument daehee_doc(const Options& o) {
    check_order(o.n, o.max_order, "--n");
    if (o.m == 0) throw UsageError("--m must be at least 1");
    OutputDocument doc{"daehee", {{"m", std::to_string(o.m)}, {"n", std::to_string(o.n)}}, {}, std::nullopt};
    std::vector<Rational> values;
    for (unsigned n = 0; n <= o.n; ++n) values.push_back(daehee_number(o.m, n));
    doc.payload.push_back(render_row("daehee", values));
    return doc;
}

OutputDocument verify_doc(const Options& o, std::ostream& err) {
    check_order(o.max_degree, o.max_order, "--max-degree");
    Identity id;
    try {
        id = parse_identity(o.identity);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.m == 0 || o.r == 0) throw UsageError("--m and --r must be at least 1");
    IdentityParams params;
    params.m = o.m;
    params.r = o.r;
    if (!o.beta.empty()) params.beta = parse_rational("beta", o.beta);
    if (params.beta < Rational(0) || params.beta > Rational(1))
        err << "warning: beta = " << params.beta << " lies outside [0, 1]; computing formally\n";

    const IdentityReport report = verify_identity(id, params, o.max_degree, o.trials, o.seed);

    OutputDocument doc{"verify", {{"identity", std::string(identity_name(id))}}, {}, report.passed};
    for (const auto& p : report.parameters) doc.parameters.push_back(p);
    doc.parameters.emplace_back("max-degree", std::to_string(o.max_degree));
    doc.parameters.emplace_back("trials", std::to_string(o.trials));
    doc.parameters.emplace_back("seed", std::to_string(o.seed));
    doc.payload.push_back({"cells", std::to_string(report.cells_checked)});
    if (report.first_failure) {
        const Mismatch& f = *report.first_failure;
        doc.payload.push_back({"failure-n", std::to_string(f.n)});
        doc.payload.push_back({"failure-trial", std::to_string(f.trial)});
        doc.payload.push_back({"relation", f.relation});
        doc.payload.push_back({"lhs", f.lhs.to_string()});
        doc.payload.push_back({"rhs", f.rhs.to_string()});
    }
    return doc;
}

}  // namespace

std::string render_json(const OutputDocument& doc) {
    nlohmann::ordered_json j;
    j["schema-version"] = schema_version;
    j["command"] = doc.command;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.parameters) j["parameters"][k] = v;
    j["payload"] = doc.payload;
    if (doc.passed) j["status"] = *doc.passed ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string render_csv(const OutputDocument& doc) {
    std::string out;
    for (const auto& row : doc.payload) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    if (doc.passed) out += *doc.passed ? "status,pass\n" : "status,fail\n";
    return out;
}

std::string render(const OutputDocument& doc, Format format) {
    return format == Format::json ? render_json(doc) : render_csv(doc);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Appell polynomial toolkit", "appell"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--max-order", o.max_order, "Largest accepted degree or order");
    };

    CLI::App* stirling = app.add_subcommand("stirling", "Triangle of Stirling numbers");
    stirling->add_option("--kind", o.kind, "first or second")->check(CLI::IsMember({"first", "second"}));
    stirling->add_option("--n", o.n, "Last row")->required();
    common(stirling);

    const std::vector<std::string> families{"bernoulli", "apostol-euler"};
    CLI::App* family = app.add_subcommand("family", "Polynomial coefficients or value of a family member");
    family->add_option("family", o.family, "bernoulli or apostol-euler")->required()->check(CLI::IsMember(families));
    family->add_option("--t", o.t, "Order t (rational)")->required();
    family->add_option("--beta", o.beta, "Apostol-Euler parameter (rational)");
    family->add_option("--n", o.n, "Degree")->required();
    family->add_option("--x", o.x, "Evaluation point (rational)");
    common(family);

    CLI::App* assoc = app.add_subcommand("assoc", "Associated sequence of a family");
    assoc->add_option("family", o.family, "bernoulli or apostol-euler")->required()->check(CLI::IsMember(families));
    assoc->add_option("--t", o.t, "Order t (rational)")->required();
    assoc->add_option("--beta", o.beta, "Apostol-Euler parameter (rational)");
    assoc->add_option("--n", o.n, "Last index")->required();
    common(assoc);

    CLI::App* daehee = app.add_subcommand("daehee", "Daehee numbers of order m");
    daehee->add_option("--m", o.m, "Order m >= 1")->required();
    daehee->add_option("--n", o.n, "Last index")->required();
    common(daehee);

    CLI::App* verify = app.add_subcommand("verify", "Check a convolution identity exactly");
    verify->add_option("identity", o.identity, "Identity name")->required();
    verify->add_option("--m", o.m, "Number of Bernoulli/Euler factors");
    verify->add_option("--r", o.r, "Number of Euler factors (mixed)");
    verify->add_option("--beta", o.beta, "Apostol-Euler parameter (rational)");
    verify->add_option("--max-degree", o.max_degree, "Largest degree checked");
    verify->add_option("--trials", o.trials, "Random point tuples per degree");
    verify->add_option("--seed", o.seed, "Seed of the point generator");
    common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        OutputDocument doc;
        if (*stirling) doc = stirling_doc(o);
        else if (*family) doc = family_doc(o, err);
        else if (*assoc) doc = assoc_doc(o, err);
        else if (*daehee) doc = daehee_doc(o);
        else doc = verify_doc(o, err);
        out << render(doc, o.format);
        if (doc.passed && !*doc.passed) return kIdentityFailed;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace appell::cli
