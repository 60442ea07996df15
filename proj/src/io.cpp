#include "stardef/io.hpp"

#include <fstream>

namespace stardef {

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json to_json(const Series& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
    return {{"series", to_string(s)}, {"coefficients", coeffs}, {"order", s.order()}, {"exact", s.exact()}};
}

Json to_json(const Sign& s) { return to_string(s); }

Json to_json(const Point& x)
{
    Json a = Json::array();
    for (const auto& c : x) a.push_back(to_string(c));
    return a;
}

Json to_json(const LawReport& r)
{
    Json w = Json::array();
    for (const auto& f : r.witness) w.push_back(to_string(f));
    Json j{{"law", r.law}, {"pass", r.pass}, {"degree_bound", r.degree_bound}, {"order", r.order}, {"cases", r.cases}};
    if (!r.pass) {
        j["witness"] = w;
        j["detail"] = r.detail;
    }
    return j;
}

Json to_json(const PositivityReport& r)
{
    Json j{{"verdict", to_string(r.verdict)}, {"method", r.method},        {"degree_bound", r.degree_bound},
           {"order", r.order},                {"trials", r.trials},        {"seed", r.seed},
           {"cases", r.cases}};
    if (r.witness) j["witness"] = to_string(*r.witness);
    if (r.value) j["value"] = to_json(*r.value);
    if (r.point) j["point"] = to_json(*r.point);
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    return j;
}

Json to_json(const CauchySchwarzReport& r)
{
    if (r.skipped) return {{"skipped", true}, {"reason", r.reason}};
    return {{"skipped", false}, {"symmetric", r.symmetric}, {"difference", to_json(r.difference)},
            {"sign", to_json(r.sign)}, {"pass", r.pass}};
}

Json to_json(const Cochain& c)
{
    Json out = Json::array();
    const auto d = static_cast<std::size_t>(c.values.rows());
    for (Eigen::Index col = 0; col < c.values.cols(); ++col)
        for (Eigen::Index row = 0; row < c.values.rows(); ++row) {
            if (c.values(row, col).is_zero()) continue;
            Json e = Json::array();
            e.push_back(row);
            for (auto t : tuple_of(static_cast<std::size_t>(col), d, c.arity)) e.push_back(t);
            e.push_back(to_string(c.values(row, col)));
            out.push_back(e);
        }
    return out;
}

Json to_json(const CohomologyReport& r)
{
    Json j{{"degree", r.degree}, {"dim_Z", r.dim_z}, {"dim_B", r.dim_b}, {"dim_H", r.dim_h}};
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(to_json(c));
    j["representatives"] = reps;
    if (r.hermitian) {
        Json hreps = Json::array();
        for (const auto& c : r.hermitian_representatives) hreps.push_back(to_json(c));
        j["hermitian"] = {{"dim_Z_H", r.dim_z_h},     {"dim_B_H", r.dim_b_h},
                          {"dim_H_H", r.dim_h_h},     {"dim_B_alt", r.dim_b_alt},
                          {"B_alt_minus_B_H", static_cast<long>(r.dim_b_alt) - static_cast<long>(r.dim_b_h)},
                          {"splitting", 2 * r.dim_h == 2 * r.dim_h_h},
                          {"representatives", hreps}};
    }
    return j;
}

Json to_json(const VerifyReport& r)
{
    Json j{{"pass", r.pass()}, {"associative", r.associative}, {"hermitian", r.hermitian}};
    if (!r.pass()) {
        j["failing_order"] = r.failing_order;
        if (!r.witness.empty()) j["witness"] = r.witness;
    }
    return j;
}

Json to_json(const ObstructionClass& o)
{
    return {{"order", o.order}, {"cocycle", o.cocycle}, {"class", to_json(o.rhs)}};
}

Json to_json(const DeformationCandidate& c)
{
    Json terms = Json::array();
    for (const auto& t : c.terms) terms.push_back(to_json(t));
    return {{"algebra", c.algebra.name}, {"order", c.order()}, {"terms", terms}};
}

Json to_json(const FinitePositivityReport& r)
{
    Json j{{"verdict", to_string(r.verdict)}, {"method", r.method}, {"cases", r.cases}};
    auto vec = [](const VectorQI& v) {
        Json a = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
        return a;
    };
    if (r.witness) j["witness"] = vec(*r.witness);
    if (r.vector) j["vector"] = vec(*r.vector);
    if (r.value) j["value"] = to_json(*r.value);
    j["hypothesis_failures"] = r.hypothesis_failures;
    return j;
}

Json to_json(const ManyPositiveReport& r)
{
    Json j{{"pass", r.pass}, {"trials", r.trials}, {"successes", r.successes}};
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

// ---------------------------------------------------------------------------

namespace {

std::string scalar_text(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw InputError("expected a scalar string or integer, got " + j.dump());
}

QI scalar_of(const Json& j)
{
    try {
        return parse_scalar(scalar_text(j));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("bad scalar: ") + e.what());
    }
}

std::size_t parse_size(const std::string& text, const std::string& what)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size() || v < 1) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("bad " + what + ": '" + text + "'");
    }
}

}  // namespace

StarProduct parse_product(const std::string& spec, std::size_t order)
{
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto value_of = [&](const std::string& key) {
        if (rest.rfind(key + "=", 0) != 0) throw InputError("product specifier '" + spec + "' needs " + key + "=...");
        return rest.substr(key.size() + 1);
    };
    if (kind == "weyl") return make_weyl(parse_size(value_of("n"), "dimension"), order);
    if (kind == "wick") return make_wick(parse_size(value_of("n"), "dimension"), order);
    if (kind == "expderiv") return product_from_json(read_json_file(value_of("file")), order);
    throw InputError("unknown product '" + spec + "'");
}

StarProduct product_from_json(const Json& j, std::size_t order)
{
    try {
        VariableFrame frame = VariableFrame::parse(j.at("frame").get<std::string>());
        Rational scale = j.contains("scale") ? scalar_of(j["scale"]).real() : Rational(1);
        unsigned bound = j.value("degree_bound", 3u);
        std::vector<DiffOperator> ds;
        for (const auto& d : j.at("derivations")) {
            DiffOperator op(frame);
            for (const auto& [var, coeff] : d.items()) {
                auto v = frame.var_index(var);
                if (!v) throw InputError("unknown variable '" + var + "' for frame " + frame.to_string());
                op = op + DiffOperator::partial(frame, *v, parse_polynomial(scalar_text(coeff), frame));
            }
            ds.push_back(std::move(op));
        }
        return make_exp_product(frame, ds, scale, order, bound, j.value("name", std::string("expderiv")));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("derivation file: ") + e.what());
    }
}

FiniteStarAlgebra parse_algebra(const std::string& spec)
{
    if (spec == "dual") return dual_numbers();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string arg = spec.substr(colon + 1);
        if (kind == "matrix") return matrix_algebra(parse_size(arg, "matrix size"));
        if (kind == "grassmann") return grassmann_algebra(parse_size(arg, "Grassmann rank"));
        if (kind == "file") return algebra_from_json(read_json_file(arg));
    }
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return algebra_from_json(read_json_file(spec));
    throw InputError("unknown algebra '" + spec + "'");
}

FiniteStarAlgebra algebra_from_json(const Json& j)
{
    try {
        const auto d = j.at("dim").get<std::size_t>();
        if (d == 0) throw InputError("algebra dimension must be positive");
        const auto di = static_cast<Eigen::Index>(d);
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        else
            for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
        if (labels.size() != d) throw InputError("labels do not match dim");
        MatrixQI mu0 = zeros<QI>(di, di * di);
        for (const auto& c : j.at("constants")) {
            auto i = c.at(0).get<std::size_t>(), k = c.at(1).get<std::size_t>(), l = c.at(2).get<std::size_t>();
            if (i >= d || k >= d || l >= d) throw InputError("structure constant index out of range");
            mu0(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(i * d + k)) += scalar_of(c.at(3));
        }
        MatrixQI inv = zeros<QI>(di, di);
        for (const auto& c : j.at("involution")) {
            auto i = c.at(0).get<std::size_t>(), k = c.at(1).get<std::size_t>();
            if (i >= d || k >= d) throw InputError("involution index out of range");
            inv(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) += scalar_of(c.at(2));
        }
        std::optional<VectorQI> unit;
        if (j.contains("unit")) {
            if (j["unit"].size() != d) throw InputError("unit does not match dim");
            VectorQI u(di);
            for (std::size_t i = 0; i < d; ++i) u(static_cast<Eigen::Index>(i)) = scalar_of(j["unit"][i]);
            unit = u;
        }
        return custom_algebra(j.value("name", std::string("custom")), labels, mu0, inv, unit);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("algebra file: ") + e.what());
    }
}

ClassicalFunctional functional_from_json(const Json& j)
{
    try {
        VariableFrame frame = VariableFrame::parse(j.at("frame").get<std::string>());
        ClassicalFunctional w(frame);
        for (const auto& t : j.at("terms")) {
            Point x;
            for (const auto& c : t.at("point")) x.push_back(scalar_of(c));
            DiffOperator op(frame);
            if (!t.contains("op")) op = DiffOperator::identity(frame);
            else
                for (const auto& term : t["op"]) {
                    auto alpha = term.at("alpha").get<Exponent>();
                    if (alpha.size() != frame.num_vars()) throw InputError("multi-index arity does not match frame");
                    op.add_term(alpha, Polynomial::constant(frame, Series(scalar_of(term.at("coeff")))));
                }
            w.add_term(x, op, t.contains("weight") ? scalar_of(t["weight"]) : QI(1));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("functional file: ") + e.what());
    }
}

Cochain cochain_from_json(const FiniteStarAlgebra& a, std::size_t arity, const Json& j)
{
    Cochain c = Cochain::zero(a, arity);
    const std::size_t d = a.dim();
    for (const auto& e : j) {
        if (e.size() != arity + 2) throw InputError("cochain entry " + e.dump() + " has the wrong length");
        auto row = e.at(0).get<std::size_t>();
        std::vector<std::size_t> tuple;
        for (std::size_t k = 0; k < arity; ++k) tuple.push_back(e.at(k + 1).get<std::size_t>());
        if (row >= d) throw InputError("cochain index out of range");
        for (auto t : tuple)
            if (t >= d) throw InputError("cochain index out of range");
        c.values(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(tuple_index(tuple, d))) += scalar_of(e.back());
    }
    return c;
}

DeformationCandidate candidate_from_json(const Json& j)
{
    try {
        const Json& alg = j.at("algebra");
        FiniteStarAlgebra a = alg.is_string() ? parse_algebra(alg.get<std::string>()) : algebra_from_json(alg);
        DeformationCandidate c{a, {}};
        for (const auto& t : j.at("terms")) c.terms.push_back(cochain_from_json(a, 2, t));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("candidate file: ") + e.what());
    }
}

}  // namespace stardef
