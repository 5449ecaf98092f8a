#include "disklab/operator_spec.hpp"

#include <cmath>
#include <utility>

namespace disklab {

const char* operator_kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::weighted_backward_shift: return "weighted_backward_shift";
        case OperatorKind::weighted_forward_shift: return "weighted_forward_shift";
        case OperatorKind::diagonal: return "diagonal";
        case OperatorKind::dense_matrix: return "dense_matrix";
        case OperatorKind::scalar_multiple: return "scalar_multiple";
        case OperatorKind::direct_sum_scalar: return "direct_sum_scalar";
    }
    return "unknown";
}

OperatorKind operator_kind_from_name(const std::string& name) {
    if (name == "weighted_backward_shift") return OperatorKind::weighted_backward_shift;
    if (name == "weighted_forward_shift") return OperatorKind::weighted_forward_shift;
    if (name == "diagonal") return OperatorKind::diagonal;
    if (name == "dense_matrix") return OperatorKind::dense_matrix;
    if (name == "scalar_multiple") return OperatorKind::scalar_multiple;
    if (name == "direct_sum_scalar") return OperatorKind::direct_sum_scalar;
    fail(ErrorCode::parse_error, "operator.kind: unknown kind '" + name + "'");
}

Cx WeightGen::at(int k) const {
    if (k < 1) fail(ErrorCode::invalid_argument, "weights: index must be >= 1");
    switch (mode) {
        case Mode::constant:
            return value;
        case Mode::list:
            if (static_cast<std::size_t>(k) > values.size())
                fail(ErrorCode::invalid_spec,
                     "weights.values: list too short for index " + std::to_string(k));
            return values[static_cast<std::size_t>(k - 1)];
        case Mode::rule:
            if (rule == RuleName::index_power)
                return scale * std::pow(static_cast<double>(k), power);
            return scale * std::pow(ratio, static_cast<double>(k - 1));
    }
    fail(ErrorCode::internal, "weights: bad mode");
}

WeightGen WeightGen::conjugated() const {
    WeightGen g = *this;
    g.value = std::conj(g.value);
    for (auto& v : g.values) v = std::conj(v);
    g.scale = std::conj(g.scale);
    g.ratio = std::conj(g.ratio);
    return g;
}

int OperatorSpec::dim() const {
    switch (kind) {
        case OperatorKind::scalar_multiple:
            return inner ? inner->dim() : 0;
        case OperatorKind::direct_sum_scalar:
            return inner ? inner->dim() + 1 : 0;
        case OperatorKind::dense_matrix:
            return static_cast<int>(entries.size());
        default:
            return truncation_dim;
    }
}

bool OperatorSpec::operator==(const OperatorSpec& other) const {
    if (kind != other.kind || truncation_dim != other.truncation_dim ||
        !(weights == other.weights) || entries != other.entries || c != other.c ||
        alpha != other.alpha)
        return false;
    if (static_cast<bool>(inner) != static_cast<bool>(other.inner)) return false;
    return !inner || *inner == *other.inner;
}

OperatorSpec adjoint_spec(const OperatorSpec& spec) {
    OperatorSpec a;
    a.truncation_dim = spec.truncation_dim;
    switch (spec.kind) {
        case OperatorKind::weighted_backward_shift:
            a.kind = OperatorKind::weighted_forward_shift;
            a.weights = spec.weights.conjugated();
            break;
        case OperatorKind::weighted_forward_shift:
            a.kind = OperatorKind::weighted_backward_shift;
            a.weights = spec.weights.conjugated();
            break;
        case OperatorKind::diagonal:
            a.kind = OperatorKind::diagonal;
            a.weights = spec.weights.conjugated();
            break;
        case OperatorKind::dense_matrix: {
            a.kind = OperatorKind::dense_matrix;
            const int n = spec.dim();
            a.entries.assign(static_cast<std::size_t>(n),
                             std::vector<Cx>(static_cast<std::size_t>(n)));
            for (int r = 0; r < n; ++r)
                for (int col = 0; col < n; ++col)
                    a.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                        std::conj(spec.entries[static_cast<std::size_t>(col)]
                                              [static_cast<std::size_t>(r)]);
            break;
        }
        case OperatorKind::scalar_multiple:
            a.kind = OperatorKind::scalar_multiple;
            a.c = std::conj(spec.c);
            a.inner = std::make_shared<OperatorSpec>(adjoint_spec(*spec.inner));
            break;
        case OperatorKind::direct_sum_scalar:
            a.kind = OperatorKind::direct_sum_scalar;
            a.alpha = std::conj(spec.alpha);
            a.inner = std::make_shared<OperatorSpec>(adjoint_spec(*spec.inner));
            break;
    }
    return a;
}

OperatorSpec backward_shift_spec(int dim, Cx weight) {
    OperatorSpec s;
    s.kind = OperatorKind::weighted_backward_shift;
    s.truncation_dim = dim;
    s.weights.mode = WeightGen::Mode::constant;
    s.weights.value = weight;
    return s;
}

OperatorSpec forward_shift_spec(int dim, Cx weight) {
    OperatorSpec s = backward_shift_spec(dim, weight);
    s.kind = OperatorKind::weighted_forward_shift;
    return s;
}

OperatorSpec backward_shift_spec(int dim, std::vector<Cx> weights) {
    OperatorSpec s;
    s.kind = OperatorKind::weighted_backward_shift;
    s.truncation_dim = dim;
    s.weights.mode = WeightGen::Mode::list;
    s.weights.values = std::move(weights);
    return s;
}

OperatorSpec diagonal_spec(std::vector<Cx> diag) {
    OperatorSpec s;
    s.kind = OperatorKind::diagonal;
    s.truncation_dim = static_cast<int>(diag.size());
    s.weights.mode = WeightGen::Mode::list;
    s.weights.values = std::move(diag);
    return s;
}

OperatorSpec dense_spec(std::vector<std::vector<Cx>> entries) {
    OperatorSpec s;
    s.kind = OperatorKind::dense_matrix;
    s.truncation_dim = static_cast<int>(entries.size());
    s.entries = std::move(entries);
    return s;
}

OperatorSpec scalar_multiple_spec(OperatorSpec inner, Cx c) {
    OperatorSpec s;
    s.kind = OperatorKind::scalar_multiple;
    s.c = c;
    s.inner = std::make_shared<OperatorSpec>(std::move(inner));
    s.truncation_dim = s.inner->dim();
    return s;
}

OperatorSpec direct_sum_scalar_spec(OperatorSpec inner, Cx alpha) {
    OperatorSpec s;
    s.kind = OperatorKind::direct_sum_scalar;
    s.alpha = alpha;
    s.inner = std::make_shared<OperatorSpec>(std::move(inner));
    s.truncation_dim = s.inner->dim() + 1;
    return s;
}

Cx complex_from_json(const nlohmann::json& j, const std::string& field) {
    if (j.is_number()) return Cx(j.get<double>(), 0.0);
    if (j.is_object()) {
        if (!j.contains("re") || !j.at("re").is_number())
            fail(ErrorCode::parse_error, field + ".re: expected a number");
        double re = j.at("re").get<double>();
        double im = 0.0;
        if (j.contains("im")) {
            if (!j.at("im").is_number())
                fail(ErrorCode::parse_error, field + ".im: expected a number");
            im = j.at("im").get<double>();
        }
        return Cx(re, im);
    }
    fail(ErrorCode::parse_error, field + ": expected a number or {\"re\":..,\"im\":..}");
}

nlohmann::json complex_to_json(Cx z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

namespace {

WeightGen weights_from_json(const nlohmann::json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ErrorCode::parse_error, ctx + ": expected an object");
    if (!j.contains("mode") || !j.at("mode").is_string())
        fail(ErrorCode::parse_error, ctx + ".mode: expected a string");
    WeightGen g;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "constant") {
        g.mode = WeightGen::Mode::constant;
        if (!j.contains("value")) fail(ErrorCode::parse_error, ctx + ".value: missing");
        g.value = complex_from_json(j.at("value"), ctx + ".value");
    } else if (mode == "list") {
        g.mode = WeightGen::Mode::list;
        if (!j.contains("values") || !j.at("values").is_array())
            fail(ErrorCode::parse_error, ctx + ".values: expected an array");
        for (const auto& v : j.at("values"))
            g.values.push_back(complex_from_json(v, ctx + ".values[]"));
    } else if (mode == "rule") {
        g.mode = WeightGen::Mode::rule;
        if (!j.contains("name") || !j.at("name").is_string())
            fail(ErrorCode::parse_error, ctx + ".name: expected a string");
        const std::string name = j.at("name").get<std::string>();
        if (j.contains("scale")) g.scale = complex_from_json(j.at("scale"), ctx + ".scale");
        if (name == "index_power") {
            g.rule = WeightGen::RuleName::index_power;
            if (j.contains("power")) {
                if (!j.at("power").is_number())
                    fail(ErrorCode::parse_error, ctx + ".power: expected a number");
                g.power = j.at("power").get<double>();
            }
        } else if (name == "geometric") {
            g.rule = WeightGen::RuleName::geometric;
            if (!j.contains("ratio")) fail(ErrorCode::parse_error, ctx + ".ratio: missing");
            g.ratio = complex_from_json(j.at("ratio"), ctx + ".ratio");
        } else {
            fail(ErrorCode::parse_error, ctx + ".name: unknown rule '" + name + "'");
        }
    } else {
        fail(ErrorCode::parse_error, ctx + ".mode: unknown mode '" + mode + "'");
    }
    return g;
}

nlohmann::json weights_to_json(const WeightGen& g) {
    nlohmann::json j;
    switch (g.mode) {
        case WeightGen::Mode::constant:
            j["mode"] = "constant";
            j["value"] = complex_to_json(g.value);
            break;
        case WeightGen::Mode::list: {
            j["mode"] = "list";
            auto arr = nlohmann::json::array();
            for (Cx v : g.values) arr.push_back(complex_to_json(v));
            j["values"] = std::move(arr);
            break;
        }
        case WeightGen::Mode::rule:
            j["mode"] = "rule";
            j["scale"] = complex_to_json(g.scale);
            if (g.rule == WeightGen::RuleName::index_power) {
                j["name"] = "index_power";
                j["power"] = g.power;
            } else {
                j["name"] = "geometric";
                j["ratio"] = complex_to_json(g.ratio);
            }
            break;
    }
    return j;
}

} // namespace

OperatorSpec operator_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(ErrorCode::parse_error, "operator: expected an object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        fail(ErrorCode::parse_error, "operator.kind: expected a string");
    OperatorSpec s;
    s.kind = operator_kind_from_name(j.at("kind").get<std::string>());

    auto read_dim = [&](bool required) {
        if (j.contains("dim")) {
            if (!j.at("dim").is_number_integer())
                fail(ErrorCode::parse_error, "operator.dim: expected an integer");
            s.truncation_dim = j.at("dim").get<int>();
        } else if (required) {
            fail(ErrorCode::parse_error, "operator.dim: missing");
        }
    };

    switch (s.kind) {
        case OperatorKind::weighted_backward_shift:
        case OperatorKind::weighted_forward_shift:
        case OperatorKind::diagonal:
            read_dim(true);
            if (!j.contains("weights"))
                fail(ErrorCode::parse_error, "operator.weights: missing");
            s.weights = weights_from_json(j.at("weights"), "operator.weights");
            break;
        case OperatorKind::dense_matrix: {
            if (!j.contains("entries") || !j.at("entries").is_array())
                fail(ErrorCode::parse_error, "operator.entries: expected an array of rows");
            for (const auto& row : j.at("entries")) {
                if (!row.is_array())
                    fail(ErrorCode::parse_error, "operator.entries: each row must be an array");
                std::vector<Cx> r;
                for (const auto& e : row) r.push_back(complex_from_json(e, "operator.entries[][]"));
                s.entries.push_back(std::move(r));
            }
            s.truncation_dim = static_cast<int>(s.entries.size());
            read_dim(false);
            if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(s.entries.size()))
                fail(ErrorCode::parse_error, "operator.dim: inconsistent with entries row count");
            s.truncation_dim = static_cast<int>(s.entries.size());
            break;
        }
        case OperatorKind::scalar_multiple:
            if (!j.contains("inner")) fail(ErrorCode::parse_error, "operator.inner: missing");
            if (!j.contains("c")) fail(ErrorCode::parse_error, "operator.c: missing");
            s.c = complex_from_json(j.at("c"), "operator.c");
            s.inner = std::make_shared<OperatorSpec>(operator_spec_from_json(j.at("inner")));
            s.truncation_dim = s.inner->dim();
            break;
        case OperatorKind::direct_sum_scalar:
            if (!j.contains("inner")) fail(ErrorCode::parse_error, "operator.inner: missing");
            if (!j.contains("alpha")) fail(ErrorCode::parse_error, "operator.alpha: missing");
            s.alpha = complex_from_json(j.at("alpha"), "operator.alpha");
            s.inner = std::make_shared<OperatorSpec>(operator_spec_from_json(j.at("inner")));
            s.truncation_dim = s.inner->dim() + 1;
            if (j.contains("dim") && j.at("dim").get<int>() != s.truncation_dim)
                fail(ErrorCode::parse_error, "operator.dim: direct_sum_scalar must add exactly one dimension");
            break;
    }
    return s;
}

nlohmann::json operator_spec_to_json(const OperatorSpec& spec) {
    nlohmann::json j;
    j["kind"] = operator_kind_name(spec.kind);
    switch (spec.kind) {
        case OperatorKind::weighted_backward_shift:
        case OperatorKind::weighted_forward_shift:
        case OperatorKind::diagonal:
            j["dim"] = spec.truncation_dim;
            j["weights"] = weights_to_json(spec.weights);
            break;
        case OperatorKind::dense_matrix: {
            auto rows = nlohmann::json::array();
            for (const auto& row : spec.entries) {
                auto r = nlohmann::json::array();
                for (Cx e : row) r.push_back(complex_to_json(e));
                rows.push_back(std::move(r));
            }
            j["entries"] = std::move(rows);
            break;
        }
        case OperatorKind::scalar_multiple:
            j["c"] = complex_to_json(spec.c);
            j["inner"] = operator_spec_to_json(*spec.inner);
            break;
        case OperatorKind::direct_sum_scalar:
            j["alpha"] = complex_to_json(spec.alpha);
            j["inner"] = operator_spec_to_json(*spec.inner);
            break;
    }
    return j;
}

} // namespace disklab
