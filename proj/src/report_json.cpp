#include "symdeg/report_json.hpp"

#include "symdeg/errors.hpp"

#include <limits>

namespace symdeg {

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Json to_json(const Rational& q) {
    if (q.get_den() == 1) return to_json(q.get_num());
    return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw PreconditionError("expected an integer or a \"num/den\" string");
}

Integer integer_from_json(const Json& j) {
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1) throw PreconditionError("expected an integer");
    return q.get_num();
}

namespace {

template <typename T>
Json matrix_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T, typename Convert>
Matrix<T> matrix_from(const Json& j, Convert convert) {
    if (!j.is_array()) throw PreconditionError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    Matrix<T> m(rows, cols, T(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw PreconditionError("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = convert(j[i][c]);
    }
    return m;
}

std::vector<std::size_t> betti_from_json(const Json& j) {
    std::vector<std::size_t> b;
    for (const auto& x : j) b.push_back(x.get<std::size_t>());
    return b;
}

} // namespace

Json to_json(const RatMatrix& m) { return matrix_json(m); }
Json to_json(const IntMatrix& m) { return matrix_json(m); }

Json to_json(const PolyMatrix& m, const std::vector<std::string>& vars) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j), vars));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const PointQ& p) {
    Json a = Json::array();
    for (const auto& c : p.coords) a.push_back(to_json(c));
    return a;
}

RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from<Rational>(j, rational_from_json); }
IntMatrix int_matrix_from_json(const Json& j) { return matrix_from<Integer>(j, integer_from_json); }

Json to_json(const FGAbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& d : g.torsion) torsion.push_back(to_json(d));
    return Json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

FGAbelianGroup group_from_json(const Json& j) {
    FGAbelianGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& d : j.at("torsion")) g.torsion.push_back(integer_from_json(d));
    validate(g);
    return g;
}

Json to_json(const RankStratification& s) {
    Json ranks = Json::object();
    for (const auto& [rank, points] : s.buckets) {
        Json list = Json::array();
        for (const auto& p : points) list.push_back(to_json(p));
        ranks[std::to_string(rank)] = std::move(list);
    }
    return Json{{"ranks", ranks}};
}

Json to_json(const RankRelationReport& r) {
    return Json{{"rank_Q", r.rank_Q}, {"rank_A", r.rank_A}, {"holds", r.holds}, {"transform", to_json(r.transform)}};
}

Json to_json(const BoundReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back(Json{{"statement", s.statement},
                             {"lhs", s.lhs},
                             {"relation", to_string(s.relation)},
                             {"rhs", s.rhs},
                             {"ok", s.ok}});
    return Json{{"N", r.N}, {"r", r.r}, {"d", r.d}, {"n", r.n}, {"steps", steps}, {"verdict", r.verdict}};
}

Json to_json(const NonsurjectivityCertificate& c) {
    return Json{{"r", c.r},
                {"n", c.n},
                {"d", c.d},
                {"dim_source", c.dim_source},
                {"dim_target", c.dim_target},
                {"surjection_impossible", c.surjection_impossible}};
}

Json to_json(const FiberGysin& g) {
    Json j{{"r", g.r},
           {"n", g.n},
           {"relation", g.relation},
           {"source_rank", g.source_rank},
           {"target_rank", g.target_rank},
           {"matrix", to_json(g.matrix)},
           {"cokernel", to_json(g.cokernel)}};
    if (g.image_index) j["image_index"] = to_json(*g.image_index);
    j["rank_deficient"] = g.rank_deficient;
    return j;
}

Json to_json(const TorsionCertificate& c) {
    Json diag = Json::array();
    for (const auto& d : c.bottom_snf.diagonal()) diag.push_back(to_json(d));
    return Json{{"r", c.r},
                {"n", c.n},
                {"d", c.d},
                {"bottom_matrix", to_json(c.bottom.matrix)},
                {"bottom_snf_diagonal", diag},
                {"fiber_cokernel", to_json(c.bottom.cokernel)},
                {"left_vertical", to_json(c.left_vertical)},
                {"right_vertical", to_json(c.right_vertical)},
                {"verticals_surjective", c.verticals_surjective},
                {"phi_check", c.phi_check},
                {"element_order", c.element_order},
                {"statement", c.statement}};
}

Json to_json(const GenericRankCertificate& c, const std::vector<std::string>& vars) {
    Json j{{"rank", c.rank},
           {"sampled_rank", c.sampled_rank},
           {"witness_rows", c.witness.rows},
           {"witness_cols", c.witness.cols},
           {"witness_minor", to_string(c.witness.det, vars)}};
    if (c.witness_remainder) j["witness_remainder"] = to_string(*c.witness_remainder, vars);
    j["larger_minors_checked"] = c.larger_minors_checked;
    return j;
}

Json to_json(const PhiTorsionReplay& r) {
    auto coords = [](const PhiCoordinates& p) {
        Json slots = Json::array();
        for (const auto& slot : p.coords) {
            Json s = Json::array();
            for (const auto& x : slot) s.push_back(to_json(x));
            slots.push_back(std::move(s));
        }
        return slots;
    };
    return Json{{"b", coords(r.b)}, {"phi_2jb", coords(r.image)}, {"check", r.check}};
}

Json envelope(const std::string& command, const Json& body) {
    Json out{{"schema", kSchemaVersion}, {"command", command}};
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    return out;
}

namespace {

Json revalidate_bounds(Json report) {
    std::size_t failed = 0;
    auto& steps = report.at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto& s = steps[i];
        const auto rel = parse_relation(s.at("relation").get<std::string>());
        if (!rel) throw PreconditionError("unknown relation in bound step");
        const bool ok = holds(s.at("lhs").get<long>(), *rel, s.at("rhs").get<long>());
        s["ok"] = ok;
        if (!ok && failed == 0) failed = i + 1;
    }
    report["verdict"] = failed == 0 ? std::string(kConsistentVerdict)
                                    : contradiction_verdict(failed, report.at("r").get<long>());
    return report;
}

} // namespace

Json revalidate(const Json& report) {
    if (!report.is_object() || report.value("schema", 0) != kSchemaVersion)
        throw PreconditionError("not a schema 1 report");
    const auto command = report.at("command").get<std::string>();
    Json out = report;

    if (command == "bounds-replay") return revalidate_bounds(out);
    if (command == "check-rank-relation") {
        out["holds"] = out.at("rank_Q").get<std::size_t>() == 2 + out.at("rank_A").get<std::size_t>();
        return out;
    }
    if (command == "nonsurj") {
        const BettiVector b(betti_from_json(out.at("betti")));
        const auto cert = nonsurjectivity_certificate(b, out.at("r").get<std::size_t>(), out.at("d").get<std::size_t>());
        out["dim_source"] = cert.dim_source;
        out["dim_target"] = cert.dim_target;
        out["surjection_impossible"] = cert.dim_source < cert.dim_target;
        return out;
    }
    if (command == "torsion") {
        const auto bottom = int_matrix_from_json(out.at("bottom_matrix"));
        const auto snf = smith_normal_form(bottom);
        Json diag = Json::array();
        for (const auto& d : snf.diagonal()) diag.push_back(to_json(d));
        out["bottom_snf_diagonal"] = diag;
        const auto coker = cokernel(bottom);
        out["fiber_cokernel"] = to_json(coker);
        out["verticals_surjective"] = cokernel(int_matrix_from_json(out.at("left_vertical"))).is_trivial() &&
                                      cokernel(int_matrix_from_json(out.at("right_vertical"))).is_trivial();
        return out;
    }
    if (command == "snf" || command == "cokernel") {
        const auto m = int_matrix_from_json(out.at("matrix"));
        const auto snf = smith_normal_form(m);
        if (out.contains("D")) {
            out["U"] = to_json(snf.U);
            out["D"] = to_json(snf.D);
            out["V"] = to_json(snf.V);
        }
        out["cokernel"] = to_json(cokernel(m));
        return out;
    }
    if (out.contains("cokernel") && out["cokernel"].is_object()) group_from_json(out["cokernel"]);
    return out;
}

} // namespace symdeg
