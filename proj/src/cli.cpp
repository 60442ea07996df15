#include "stardef/cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "stardef/io.hpp"
#include "stardef/suites.hpp"

namespace stardef::cli {

namespace {

struct Options {
    std::size_t n = 1;
    std::size_t order = 4;
    std::string product = "weyl:n=1";
    unsigned deg = 3;
    std::string algebra = "matrix:2";
    std::size_t degree = 2;
    std::string functional;
    std::string candidate;
    std::string h2_seed;
    bool pullback_laplace = false;
    std::uint64_t seed = default_seed;
    std::size_t trials = 50;
    std::size_t grassmann_n = 3;
};

struct Outcome {
    Json verdicts = Json::object();
    Json witnesses = Json::object();
    int code = Pass;
};

Outcome demo_delta_weyl(const Options& o, Json& params)
{
    params = {{"n", o.n}, {"order", o.order}};
    StarProduct p = make_weyl(o.n, o.order);
    const VariableFrame& f = p.frame();
    Polynomial h = Polynomial::constant(f, Series(0));
    for (std::size_t k = 0; k < f.num_vars(); ++k) {
        Polynomial x = Polynomial::variable(f, k);
        h = h + x * x;
    }
    Series value = star_mul(p, h, h, o.order).eval(Point(f.num_vars(), QI(0)));

    Outcome out;
    out.witnesses["H"] = to_string(h);
    out.witnesses["delta0(H * H)"] = to_json(value);
    const bool low_zero = value.coeff(0).is_zero() && (o.order < 1 || value.coeff(1).is_zero());
    out.verdicts["low_orders_vanish"] = low_zero;
    if (o.order >= 2) {
        QI c2 = value.coeff(2);
        out.witnesses["lambda2_coefficient"] = to_string(c2);
        out.witnesses["stated_value"] = "-1/2";
        const bool negative = low_zero && c2.is_real() && c2.real() < 0;
        out.verdicts["lambda2"] = negative ? "negative" : "not negative";
        out.verdicts["matches_stated_value"] = c2 == QI(ratio(-1, 2));
        if (!negative) out.code = ViolationFound;
    } else {
        out.verdicts["lambda2"] = "undetermined at this order";
    }
    return out;
}

Outcome verify_star_laws(const Options& o, Json& params)
{
    params = {{"product", o.product}, {"deg", o.deg}, {"order", o.order}};
    StarProduct p = parse_product(o.product, o.order);
    Outcome out;
    for (const auto& r : {assoc_check(p, o.deg, o.order), hermitian_check(p, o.deg, o.order)}) {
        out.verdicts[r.law] = r.pass;
        if (!r.pass) {
            out.witnesses[r.law] = to_json(r);
            out.code = ViolationFound;
        }
    }
    return out;
}

Outcome suite_outcome(const SuiteReport& r)
{
    Outcome out;
    out.verdicts[r.name] = r.pass();
    out.verdicts["cases"] = r.cases;
    if (!r.pass()) {
        out.witnesses[r.name] = r.failures;
        out.code = ViolationFound;
    }
    return out;
}

Outcome verify_hochschild_signs(const Options& o, Json& params)
{
    params = {{"algebra", o.algebra}, {"trials", o.trials}, {"seed", o.seed}};
    return suite_outcome(hochschild_sign_suite(parse_algebra(o.algebra), o.trials, o.seed));
}

Outcome verify_cohomology(const Options& o, Json& params)
{
    params = {{"algebra", o.algebra}, {"degree", o.degree}};
    FiniteStarAlgebra a = parse_algebra(o.algebra);
    Outcome out;
    Json dims = Json::array();
    bool split = true;
    for (std::size_t k = 0; k <= o.degree; ++k) {
        CohomologyReport r = hermitian_cohomology_dims(a, k);
        dims.push_back(to_json(r));
        split = split && r.dim_h == r.dim_h_h;
        out.verdicts["dim_H" + std::to_string(k)] = r.dim_h;
    }
    out.verdicts["hermitian_splitting"] = split;
    out.witnesses["degrees"] = dims;
    if (!split) out.code = ViolationFound;
    return out;
}

Outcome verify_deform(const Options& o, Json& params)
{
    Outcome out;
    if (!o.candidate.empty()) {
        params = {{"candidate", o.candidate}};
        DeformationCandidate c = candidate_from_json(read_json_file(o.candidate));
        VerifyReport r = candidate_verify(c);
        out.verdicts["candidate"] = to_json(r);
        if (!r.pass()) out.code = ViolationFound;
        return out;
    }
    params = {{"algebra", o.algebra}, {"order", o.order}, {"h2_seed", o.h2_seed}};
    FiniteStarAlgebra a = parse_algebra(o.algebra);
    Chooser chooser;
    if (!o.h2_seed.empty()) chooser.seeds[1] = cochain_from_json(a, 2, read_json_file(o.h2_seed));
    DeformResult res = deform_up_to(a, o.order, chooser);
    if (auto* ob = std::get_if<ObstructionClass>(&res)) {
        out.verdicts["deformation"] = "obstructed";
        out.witnesses["obstruction"] = to_json(*ob);
        return out;
    }
    const auto& c = std::get<DeformationCandidate>(res);
    VerifyReport r = candidate_verify(c);
    out.verdicts["deformation"] = "extended";
    out.verdicts["verify"] = to_json(r);
    out.witnesses["candidate"] = to_json(c);
    if (!r.pass()) out.code = ViolationFound;
    return out;
}

Outcome verify_positivity(const Options& o, Json& params)
{
    Outcome out;
    if (!o.candidate.empty()) {
        params = {{"candidate", o.candidate}, {"trials", o.trials}, {"seed", o.seed}};
        DeformationCandidate c = candidate_from_json(read_json_file(o.candidate));
        FinitePositivityReport r = strong_positivity_certify(c, o.trials, o.seed);
        ManyPositiveReport m = many_positive_check(c, FunctionalPolicy::identity(), o.trials, o.seed);
        out.verdicts["strong_positivity"] = to_string(r.verdict);
        out.verdicts["sufficiently_many"] = m.pass;
        out.witnesses["strong_positivity"] = to_json(r);
        out.witnesses["sufficiently_many"] = to_json(m);
        if (r.verdict == PositivityReport::Verdict::Violation || !m.pass) out.code = ViolationFound;
        return out;
    }
    params = {{"product", o.product}, {"functional", o.functional}, {"pullback_laplace", o.pullback_laplace},
              {"deg", o.deg},         {"order", o.order},           {"trials", o.trials},
              {"seed", o.seed}};
    StarProduct p = parse_product(o.product, o.order);
    PositivityReport r;
    if (o.functional.empty()) {
        r = strong_positivity_certify(p, o.deg, o.order, o.trials, o.seed);
    } else {
        ClassicalFunctional w0 = functional_from_json(read_json_file(o.functional)).in_frame(p.frame().kind);
        DeformedFunctional w = o.pullback_laplace
                                   ? deform_via_T(w0, make_T_laplace(w0.frame(), Rational(1), o.order))
                                   : DeformedFunctional::classical(w0);
        r = positivity_audit(w, p, o.deg, o.order, o.trials, o.seed);
    }
    out.verdicts["positivity"] = to_string(r.verdict);
    out.witnesses["report"] = to_json(r);
    if (r.verdict == PositivityReport::Verdict::Violation) out.code = ViolationFound;
    return out;
}

Outcome verify_ordered_ring(const Options& o, Json& params)
{
    params = {{"trials", o.trials}, {"seed", o.seed}, {"grassmann_n", o.grassmann_n}};
    Outcome ring = suite_outcome(ordered_ring_suite(o.trials, o.seed));
    Outcome cone = suite_outcome(grassmann_cone_suite(o.grassmann_n, o.trials, o.seed));
    Outcome out;
    out.verdicts = {{"ordered_ring", ring.verdicts}, {"grassmann_cone", cone.verdicts}};
    if (!ring.witnesses.empty()) out.witnesses["ordered_ring"] = ring.witnesses;
    if (!cone.witnesses.empty()) out.witnesses["grassmann_cone"] = cone.witnesses;
    out.code = std::max(ring.code, cone.code);
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Formal deformations, positivity and Hochschild cohomology", "stardef"};
    app.require_subcommand(1);

    auto* demo = app.add_subcommand("demo", "Run a demonstration");
    demo->require_subcommand(1);
    auto* delta = demo->add_subcommand("delta-weyl", "delta_0(H * H) for the Weyl product, H = |q|^2 + |p|^2");
    delta->add_option("--n", o.n, "Degrees of freedom")->capture_default_str()->check(CLI::PositiveNumber);
    delta->add_option("--order", o.order, "Truncation order N")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto add_seed = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "Random seed")->capture_default_str();
        s->add_option("--trials", o.trials, "Random cases")->capture_default_str();
    };
    auto* laws = verify->add_subcommand("star-laws", "Associativity and Hermiticity of a star product");
    laws->add_option("--product", o.product, "weyl:n=N, wick:n=N or expderiv:file=PATH")->capture_default_str();
    laws->add_option("--deg", o.deg, "Degree bound for test monomials")->capture_default_str();
    laws->add_option("--order", o.order, "Truncation order")->capture_default_str();

    auto* signs = verify->add_subcommand("hochschild-signs", "Involution and Gerstenhaber sign identities");
    signs->add_option("--algebra", o.algebra, "matrix:n, grassmann:n, dual or a JSON file")->capture_default_str();
    add_seed(signs);

    auto* coho = verify->add_subcommand("cohomology", "Hochschild and Hermitian cohomology dimensions");
    coho->add_option("--algebra", o.algebra, "matrix:n, grassmann:n, dual or a JSON file")->capture_default_str();
    coho->add_option("--degree", o.degree, "Highest cochain degree")->capture_default_str();

    auto* def = verify->add_subcommand("deform", "Order-by-order Hermitian deformation");
    def->add_option("--algebra", o.algebra, "matrix:n, grassmann:n, dual or a JSON file")->capture_default_str();
    def->add_option("--order", o.order, "Deformation order")->capture_default_str();
    def->add_option("--h2-seed", o.h2_seed, "JSON file with a 2-cocycle added at order 1");
    def->add_option("--candidate", o.candidate, "Verify a candidate JSON file instead");

    auto* pos = verify->add_subcommand("positivity", "Positivity of functionals under a deformation");
    pos->add_option("--product", o.product, "weyl:n=N, wick:n=N or expderiv:file=PATH")->capture_default_str();
    pos->add_option("--functional", o.functional, "Classical functional JSON file");
    pos->add_flag("--pullback-laplace", o.pullback_laplace, "Deform the functional by exp(l Laplacian)");
    pos->add_option("--candidate", o.candidate, "Finite deformation candidate JSON file");
    pos->add_option("--deg", o.deg, "Degree bound for the grid")->capture_default_str();
    pos->add_option("--order", o.order, "Truncation order")->capture_default_str();
    add_seed(pos);

    auto* ring = verify->add_subcommand("ordered-ring", "Ordered ring of real series and the Grassmann cone");
    ring->add_option("--grassmann-n", o.grassmann_n, "Grassmann generators")->capture_default_str();
    add_seed(ring);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Pass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return UsageError;
    }

    std::string command;
    Outcome (*handler)(const Options&, Json&) = nullptr;
    if (delta->parsed()) {
        command = "demo delta-weyl";
        handler = demo_delta_weyl;
    } else {
        const std::pair<CLI::App*, Outcome (*)(const Options&, Json&)> table[] = {
            {laws, verify_star_laws},  {signs, verify_hochschild_signs}, {coho, verify_cohomology},
            {def, verify_deform},      {pos, verify_positivity},         {ring, verify_ordered_ring}};
        for (const auto& [sub, h] : table)
            if (sub->parsed()) {
                command = "verify " + sub->get_name();
                handler = h;
            }
    }

    const auto start = std::chrono::steady_clock::now();
    Json params;
    Outcome result;
    try {
        result = handler(o, params);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return UsageError;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return UsageError;
    } catch (const SizeCapExceeded& e) {
        err << "size cap: " << e.what() << "\n";
        return UsageError;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            err << "invalid argument: " << e.what() << "\n";
            return UsageError;
        }
        result.code = ViolationFound;
        result.verdicts["internal_check"] = false;
        result.witnesses["internal_check"] = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json report{{"command", command},
                {"parameters", params},
                {"verdicts", result.verdicts},
                {"witnesses", result.witnesses},
                {"exit_code", result.code},
                {"timing", {{"seconds", seconds}}}};
    out << report.dump(2) << "\n";
    return result.code;
}

}  // namespace stardef::cli
