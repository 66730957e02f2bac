#include "sympath/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace sympath {

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ConfigParse("matrix: expected a nested array of numbers");
    const int rows = int(j.size());
    const int cols = int(j[0].size());
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (int(j[std::size_t(r)].size()) != cols)
            throw ConfigParse("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j[std::size_t(r)][std::size_t(c)];
            if (!cell.is_number()) throw ConfigParse("matrix: entries must be numbers");
            m(r, c) = cell.get<double>();
        }
    }
    return m;
}

Json to_json(const SignatureTriple& sig) {
    return Json::array({sig.m_plus, sig.m_zero, sig.m_minus});
}

Json to_json(const IndexReport& report) {
    Json crossings = Json::array();
    for (const Crossing& c : report.crossings)
        crossings.push_back({{"t", c.t}, {"dim", c.dim}, {"sig", to_json(c.sig)}});
    return Json{{"index", report.index},
                {"raw_maslov", report.raw_maslov},
                {"nullity", report.nullity_at_end},
                {"crossings", std::move(crossings)},
                {"convention", report.convention_tag}};
}

Json to_json(const VerificationReport& report) {
    Json claims = Json::array();
    for (const Claim& c : report.claims)
        claims.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"kind", c.is_inequality ? "ge" : "eq"},
                          {"satisfied", c.satisfied}});
    return Json{{"seed", report.seed},
                {"descriptor", report.path_descriptor},
                {"retried", report.retried},
                {"all_satisfied", report.all_satisfied()},
                {"claims", std::move(claims)}};
}

Json to_json(const GalerkinForm& form) {
    return Json{{"modes", form.modes},
                {"quad_order", form.quad_order},
                {"dim", form.matrix.rows()},
                {"m_plus", form.sig.m_plus},
                {"m_zero", form.sig.m_zero},
                {"m_minus", form.sig.m_minus}};
}

Json to_json(const CoefficientPath& path, int orbit_samples) {
    Json j{{"n", path.n()}, {"tau", path.tau()}};
    Json flags = Json::array();
    if (path.periodic()) flags.push_back("periodic");
    if (path.brake_symmetric()) flags.push_back("brake");
    j["flags"] = std::move(flags);

    if (path.kind() == CoefficientPath::Kind::Constant) {
        j["kind"] = "constant";
        j["coeffs"] = to_json(path(0.0));
    } else if (path.kind() == CoefficientPath::Kind::Trig && path.trig_c0()) {
        j["kind"] = "trig";
        Json cos_list = Json::array(), sin_list = Json::array();
        for (const Mat& m : path.trig_cos()) cos_list.push_back(to_json(m));
        for (const Mat& m : path.trig_sin()) sin_list.push_back(to_json(m));
        j["coeffs"] = Json{{"c0", to_json(*path.trig_c0())},
                           {"cos", std::move(cos_list)},
                           {"sin", std::move(sin_list)}};
    } else {
        j["kind"] = "orbit";
        Json times = Json::array(), values = Json::array();
        for (int i = 0; i <= orbit_samples; ++i) {
            const double t = path.tau() * i / orbit_samples;
            times.push_back(t);
            values.push_back(to_json(path(t)));
        }
        j["coeffs"] = Json{{"times", std::move(times)}, {"values", std::move(values)}};
    }
    return j;
}

CoefficientPath coefficient_path_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        const double tau = j.at("tau").get<double>();
        const std::string kind = j.at("kind").get<std::string>();
        bool periodic = false, brake = false;
        if (j.contains("flags"))
            for (const auto& f : j.at("flags")) {
                if (f == "periodic") periodic = true;
                if (f == "brake") brake = true;
            }

        if (kind == "constant") {
            const Mat b = mat_from_json(j.at("coeffs"));
            if (b.rows() != 2 * n) throw ConfigParse("constant path: matrix size vs n");
            CoefficientPath p = CoefficientPath::constant(b, tau);
            return p;
        }
        if (kind == "trig") {
            const Json& c = j.at("coeffs");
            Mat c0 = mat_from_json(c.at("c0"));
            std::vector<Mat> cc, sc;
            for (const auto& m : c.at("cos")) cc.push_back(mat_from_json(m));
            for (const auto& m : c.at("sin")) sc.push_back(mat_from_json(m));
            return CoefficientPath::trig(std::move(c0), std::move(cc), std::move(sc), tau);
        }
        if (kind == "orbit") {
            const Json& c = j.at("coeffs");
            auto times = std::make_shared<std::vector<double>>();
            auto values = std::make_shared<std::vector<Mat>>();
            for (const auto& t : c.at("times")) times->push_back(t.get<double>());
            for (const auto& v : c.at("values")) values->push_back(mat_from_json(v));
            if (times->size() != values->size() || times->size() < 2)
                throw ConfigParse("orbit path: times and values must align");
            auto eval = [times, values](double t) -> Mat {
                auto it = std::upper_bound(times->begin(), times->end(), t);
                std::size_t hi = std::min<std::size_t>(
                    std::size_t(std::distance(times->begin(), it)), times->size() - 1);
                if (hi == 0) hi = 1;
                const std::size_t lo = hi - 1;
                const double span = (*times)[hi] - (*times)[lo];
                const double u = span > 0 ? std::clamp((t - (*times)[lo]) / span, 0.0, 1.0) : 0.0;
                return Mat((1 - u) * (*values)[lo] + u * (*values)[hi]);
            };
            return CoefficientPath(n, tau, eval, CoefficientPath::Kind::Orbit, periodic, brake);
        }
        throw ConfigParse("coefficient path: unknown kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw ConfigParse(std::string("coefficient path: ") + e.what());
    }
}

Json to_json(const BrakeOrbit& orbit, bool include_samples) {
    Json j{{"hamiltonian", orbit.hamiltonian().tag},
           {"n", orbit.hamiltonian().n},
           {"T", orbit.period()},
           {"shooting_residual", orbit.shooting_residual()},
           {"energy_drift", orbit.energy_drift()},
           {"brake_residual", orbit.brake_residual()}};
    Json q0 = Json::array();
    const Vec x0 = orbit.initial_point();
    for (int i = orbit.hamiltonian().n; i < 2 * orbit.hamiltonian().n; ++i)
        q0.push_back(x0(i));
    j["q0"] = std::move(q0);
    if (include_samples) {
        Json times = Json::array(), states = Json::array();
        const auto& samples = orbit.half_samples();
        const int count = int(samples.size()) - 1;
        for (int i = 0; i <= count; ++i) {
            times.push_back(0.5 * orbit.period() * i / count);
            Json row = Json::array();
            for (int c = 0; c < samples[std::size_t(i)].size(); ++c)
                row.push_back(samples[std::size_t(i)](c));
            states.push_back(std::move(row));
        }
        j["samples"] = Json{{"t", std::move(times)}, {"x", std::move(states)}};
    }
    return j;
}

HamiltonianSpec hamiltonian_from_json(const Json& j) {
    try {
        const std::string builtin = j.at("builtin").get<std::string>();
        const int n = j.at("n").get<int>();
        if (builtin == "harmonic") return HamiltonianSpec::harmonic(n);
        if (builtin == "quartic") return HamiltonianSpec::convex_quartic(n);
        if (builtin == "polynomial") {
            std::vector<HamiltonianSpec::Monomial> terms;
            for (const auto& t : j.at("terms")) {
                HamiltonianSpec::Monomial m;
                m.coefficient = t.at("coeff").get<double>();
                for (const auto& e : t.at("exponents")) m.exponents.push_back(e.get<int>());
                terms.push_back(std::move(m));
            }
            HamiltonianSpec h = HamiltonianSpec::polynomial(n, std::move(terms));
            if (h.reversibility_residual() > 1e-10)
                throw ConfigParse("polynomial Hamiltonian breaks the reversibility symmetry");
            return h;
        }
        throw ConfigParse("hamiltonian: unknown builtin '" + builtin + "'");
    } catch (const Json::exception& e) {
        throw ConfigParse(std::string("hamiltonian: ") + e.what());
    }
}

} // namespace sympath
