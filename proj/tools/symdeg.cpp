// symdeg: command-line front end for the symmetric degeneracy toolkit.
//
// Exit codes: 0 success, 2 user error (bad input or violated precondition),
// 3 internal assertion failure.

#include "symdeg/bounds.hpp"
#include "symdeg/dual_variety.hpp"
#include "symdeg/errors.hpp"
#include "symdeg/hessian.hpp"
#include "symdeg/poly_parser.hpp"
#include "symdeg/quadric_homology.hpp"
#include "symdeg/report_json.hpp"
#include "symdeg/smith.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace symdeg;

namespace {

constexpr int kExitUser = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
    std::uint64_t seed = 0;
    std::string format = "text";
    std::size_t sample_budget = 4;
    std::string vars;

    bool json() const { return format == "json"; }
    GenericRankOptions rank_options() const { return {seed, sample_budget}; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

struct PolyInput {
    MultiPoly f;
    std::vector<std::string> vars;
};

// "@path" reads the polynomial from a file.
PolyInput load_poly(const std::string& arg, const RunConfig& cfg) {
    const std::string text = (!arg.empty() && arg.front() == '@') ? read_file(arg.substr(1)) : arg;
    PolyInput in;
    in.vars = cfg.vars.empty() ? infer_variables(text) : split(cfg.vars, ',');
    if (in.vars.empty()) throw PreconditionError("polynomial has no variables");
    in.f = parse_poly(text, in.vars);
    return in;
}

BettiVector load_betti(const std::string& text) {
    std::vector<std::size_t> b;
    for (const auto& field : split(text, ',')) {
        try {
            b.push_back(std::stoul(field));
        } catch (const std::exception&) {
            throw PreconditionError("bad Betti number '" + field + "'");
        }
    }
    return BettiVector(std::move(b));
}

IntMatrix load_int_matrix(const std::string& arg) {
    const std::string text = (!arg.empty() && arg.front() == '@') ? read_file(arg.substr(1)) : arg;
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("matrix JSON: ") + e.what());
    }
    return int_matrix_from_json(j);
}

std::string vec_text(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string point_text(const PointQ& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p.coords[i]);
    return s + ")";
}

template <typename T>
void print_matrix(std::ostream& out, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
        out << "]\n";
    }
}

void emit(const RunConfig& cfg, const std::string& command, const Json& body, const std::string& text) {
    if (cfg.json()) std::cout << envelope(command, body).dump(2) << "\n";
    else std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symdeg: exact Hessian rank, dual-variety and quadric-bundle certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for randomised screening")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--sample-budget", cfg.sample_budget, "Random points for generic-rank screening")->capture_default_str();
    app.add_option("--vars", cfg.vars, "Comma-separated variable names (default: inferred x0..xN)");

    std::function<void()> action;
    std::string poly_arg, point_arg, file_arg, betti_arg, matrix_arg;
    bool on_hypersurface = false;
    std::size_t r_arg = 0, d_arg = 0;
    long k_arg = 0;
    std::optional<std::size_t> quadric_rank, fiber_dim;
    long big_n = 0, small_r = 0, dim_d = 0;

    auto* hessian = app.add_subcommand("hessian", "Print the symbolic Hessian matrix");
    hessian->add_option("poly", poly_arg, "Polynomial (or @file)")->required();
    hessian->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            const auto h = build_hessian(in.f);
            std::ostringstream text;
            for (std::size_t i = 0; i < h.size(); ++i) {
                text << "[";
                for (std::size_t j = 0; j < h.size(); ++j) text << (j ? ", " : "") << to_string(h.hessian(i, j), in.vars);
                text << "]\n";
            }
            emit(cfg, "hessian",
                 Json{{"vars", in.vars}, {"degree", h.degree}, {"hessian", to_json(h.hessian, in.vars)}}, text.str());
        };
    });

    auto* rank_at_cmd = app.add_subcommand("rank-at", "Rank of the Hessian at a point");
    rank_at_cmd->add_option("poly", poly_arg)->required();
    rank_at_cmd->add_option("point", point_arg, "Comma-separated coordinates")->required();
    rank_at_cmd->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            const PointQ p = parse_point(point_arg);
            const auto rank = rank_at(build_hessian(in.f), p);
            emit(cfg, "rank-at", Json{{"point", to_json(p)}, {"rank", rank}}, std::to_string(rank) + "\n");
        };
    });

    auto* stratify_cmd = app.add_subcommand("stratify", "Bucket points by Hessian rank");
    stratify_cmd->add_option("poly", poly_arg)->required();
    stratify_cmd->add_option("points-file", file_arg, "One comma-separated point per line")->required();
    stratify_cmd->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            std::vector<PointQ> points;
            for (const auto& line : split(read_file(file_arg), '\n'))
                if (!line.empty() && line.front() != '#') points.push_back(parse_point(line));
            const auto s = stratify(build_hessian(in.f), points);
            std::ostringstream text;
            for (const auto& [rank, pts] : s.buckets) {
                text << rank << ":";
                for (const auto& p : pts) text << " " << point_text(p);
                text << "\n";
            }
            emit(cfg, "stratify", to_json(s), text.str());
        };
    });

    auto* generic = app.add_subcommand("generic-rank", "Certified generic Hessian rank");
    generic->add_option("poly", poly_arg)->required();
    generic->add_flag("--on-hypersurface", on_hypersurface, "Generic rank along {f = 0}");
    generic->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            const auto h = build_hessian(in.f);
            std::ostringstream text;
            Json body;
            if (on_hypersurface) {
                const auto res = generic_rank_on_hypersurface(h, cfg.rank_options());
                const auto& c = res.certificate;
                text << c.rank << "\n"
                     << "certificate minor rows " << vec_text(c.witness.rows) << " cols " << vec_text(c.witness.cols)
                     << ": " << to_string(c.witness.det, in.vars) << "\n"
                     << "remainder mod f: " << to_string(*c.witness_remainder, in.vars) << "\n";
                body = Json{{"on_hypersurface", true}, {"certificate", to_json(c, in.vars)}};
                if (res.determinant_quotient) {
                    text << "det(Hessian) = f * (" << to_string(*res.determinant_quotient, in.vars) << ")\n";
                    body["determinant_quotient"] = to_string(*res.determinant_quotient, in.vars);
                }
                body["suspect_not_reduced"] = res.suspect_not_reduced;
                if (res.suspect_not_reduced) std::cerr << "warning: f looks non-reduced; the answer may describe the wrong variety\n";
            } else {
                const auto c = generic_rank_ambient(h, cfg.rank_options());
                text << c.rank << "\n"
                     << "certificate minor rows " << vec_text(c.witness.rows) << " cols " << vec_text(c.witness.cols)
                     << ": " << to_string(c.witness.det, in.vars) << "\n";
                body = Json{{"on_hypersurface", false}, {"certificate", to_json(c, in.vars)}};
            }
            emit(cfg, "generic-rank", body, text.str());
        };
    });

    auto* dual = app.add_subcommand("dual-dim", "Dimension of the dual variety");
    dual->add_option("poly", poly_arg)->required();
    dual->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            const auto dim = dual_dimension(in.f, cfg.rank_options());
            emit(cfg, "dual-dim", Json{{"dual_dimension", dim}, {"generic_rank", dim + 2}}, std::to_string(dim) + "\n");
        };
    });

    auto* relation = app.add_subcommand("check-rank-relation", "rank Q_p against 2 + rank of the second fundamental form");
    relation->add_option("poly", poly_arg)->required();
    relation->add_option("point", point_arg)->required();
    relation->callback([&] {
        action = [&] {
            const auto in = load_poly(poly_arg, cfg);
            const auto rep = rank_relation_check(in.f, parse_point(point_arg));
            std::ostringstream text;
            text << "rank_Q " << rep.rank_Q << "\nrank_A " << rep.rank_A << "\nholds " << (rep.holds ? "true" : "false") << "\n";
            emit(cfg, "check-rank-relation", to_json(rep), text.str());
            if (!rep.holds) throw InternalError("rank relation failed");
        };
    });

    auto* qb = app.add_subcommand("quad-betti", "Ranks of H^{2i} of the quadric in C^r");
    qb->add_option("r", r_arg)->required();
    qb->callback([&] {
        action = [&] {
            const auto data = quadric_fiber_data(r_arg);
            std::vector<std::size_t> table;
            for (std::size_t i = 0; i <= data.dim; ++i) table.push_back(quadric_betti(r_arg, i));
            emit(cfg, "quad-betti",
                 Json{{"r", r_arg}, {"n", data.n}, {"table", table}, {"basis", data.basis_labels}, {"relations", data.relations}},
                 vec_text(table) + "\n");
        };
    });

    auto* lh = app.add_subcommand("lh-dim", "Leray-Hirsch dimension of a quadric or projective bundle");
    lh->add_option("--betti", betti_arg, "b0,b1,...,b2d")->required();
    auto* qr = lh->add_option("--quadric-rank", quadric_rank, "Quadric bundle of rank r");
    auto* fd = lh->add_option("--fiber-dim", fiber_dim, "Projective bundle with fiber P^m");
    qr->excludes(fd);
    lh->add_option("--k", k_arg, "Homological degree")->required();
    lh->callback([&] {
        action = [&] {
            const auto b = load_betti(betti_arg);
            std::size_t dim = 0;
            if (quadric_rank) dim = lh_quadric_dim(b, *quadric_rank, k_arg);
            else if (fiber_dim) dim = lh_projective_dim(b, *fiber_dim, k_arg);
            else throw PreconditionError("one of --quadric-rank or --fiber-dim is required");
            emit(cfg, "lh-dim", Json{{"betti", b.values()}, {"k", k_arg}, {"dimension", dim}}, std::to_string(dim) + "\n");
        };
    });

    auto* nonsurj = app.add_subcommand("nonsurj", "Dimension-gap certificate that j* is not surjective (even r)");
    nonsurj->add_option("--betti", betti_arg)->required();
    nonsurj->add_option("--r", r_arg)->required();
    nonsurj->add_option("--d", d_arg)->required();
    nonsurj->callback([&] {
        action = [&] {
            const auto b = load_betti(betti_arg);
            const auto c = nonsurjectivity_certificate(b, r_arg, d_arg);
            std::ostringstream text;
            text << "dim source " << c.dim_source << "\ndim target " << c.dim_target << "\n"
                 << (c.surjection_impossible ? "not surjective" : "no obstruction") << "\n";
            Json body = Json{{"betti", b.values()}};
            body.update(to_json(c));
            emit(cfg, "nonsurj", body, text.str());
        };
    });

    auto* torsion = app.add_subcommand("torsion", "2-torsion certificate for odd r");
    torsion->add_option("--betti", betti_arg)->required();
    torsion->add_option("--r", r_arg)->required();
    torsion->add_option("--d", d_arg)->required();
    torsion->callback([&] {
        action = [&] {
            const auto b = load_betti(betti_arg);
            const auto c = torsion_certificate(b, r_arg, d_arg);
            std::ostringstream text;
            text << "fiber cokernel " << to_string(c.bottom.cokernel) << "\n"
                 << "verticals surjective " << (c.verticals_surjective ? "true" : "false") << "\n"
                 << "4a in Im j* " << (c.phi_check ? "true" : "false") << "\n"
                 << c.statement << "\n";
            Json body = Json{{"betti", b.values()}};
            body.update(to_json(c));
            emit(cfg, "torsion", body, text.str());
        };
    });

    auto* bounds = app.add_subcommand("bounds", "Dimension bounds");
    bounds->require_subcommand(1);
    auto* replay = bounds->add_subcommand("replay", "Replay the proof of d <= N - r");
    replay->add_option("N", big_n)->required();
    replay->add_option("r", small_r)->required();
    replay->add_option("d", dim_d)->required();
    replay->add_option("--betti", betti_arg, "Default: [0,...,0,1]");
    replay->callback([&] {
        action = [&] {
            if (dim_d < 0) throw PreconditionError("d must be nonnegative");
            const auto b = betti_arg.empty() ? BettiVector::top_class_only(static_cast<std::size_t>(dim_d)) : load_betti(betti_arg);
            const auto rep = replay_main_theorem(big_n, small_r, dim_d, b);
            std::ostringstream text;
            for (std::size_t i = 0; i < rep.steps.size(); ++i) {
                const auto& s = rep.steps[i];
                text << (i + 1) << ". " << s.statement << ": " << s.lhs << " " << to_string(s.relation) << " " << s.rhs
                     << (s.ok ? "  ok" : "  FAILS") << "\n";
            }
            text << "verdict: " << rep.verdict << "\n";
            emit(cfg, "bounds-replay", to_json(rep), text.str());
        };
    });
    auto* main_cmd = bounds->add_subcommand("main", "N - r");
    main_cmd->add_option("N", big_n)->required();
    main_cmd->add_option("r", small_r)->required();
    main_cmd->callback([&] {
        action = [&] {
            const auto v = main_bound(big_n, small_r);
            emit(cfg, "bounds-main", Json{{"N", big_n}, {"r", small_r}, {"bound", v}}, std::to_string(v) + "\n");
        };
    });
    auto* cor = bounds->add_subcommand("corollary", "Binomial threshold C(N-r+1, 2)");
    cor->add_option("N", big_n)->required();
    cor->add_option("r", small_r)->required();
    cor->callback([&] {
        action = [&] {
            const auto c = corollary_threshold(big_n, small_r);
            emit(cfg, "bounds-corollary",
                 Json{{"N", big_n}, {"r", small_r}, {"threshold", c.threshold}, {"telescoped_sum", c.telescoped_sum},
                      {"identity_holds", c.identity_holds}},
                 std::to_string(c.threshold) + "\n");
        };
    });
    auto* stratum = bounds->add_subcommand("stratum", "Dimension of rank <= r symmetric N x N forms (projectivised)");
    stratum->add_option("N", big_n)->required();
    stratum->add_option("r", small_r)->required();
    stratum->callback([&] {
        action = [&] {
            const auto v = sym_stratum_dim(big_n, small_r);
            emit(cfg, "bounds-stratum", Json{{"N", big_n}, {"r", small_r}, {"dimension", v}}, std::to_string(v) + "\n");
        };
    });

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix (JSON rows or @file)");
    snf->add_option("matrix", matrix_arg)->required();
    snf->callback([&] {
        action = [&] {
            const auto m = load_int_matrix(matrix_arg);
            const auto s = smith_normal_form(m);
            std::ostringstream text;
            text << "U =\n";
            print_matrix(text, s.U);
            text << "D =\n";
            print_matrix(text, s.D);
            text << "V =\n";
            print_matrix(text, s.V);
            emit(cfg, "snf",
                 Json{{"matrix", to_json(m)}, {"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)}, {"cokernel", to_json(cokernel(m))}},
                 text.str());
        };
    });

    auto* coker = app.add_subcommand("cokernel", "Cokernel of an integer matrix as an abelian group");
    coker->add_option("matrix", matrix_arg)->required();
    coker->callback([&] {
        action = [&] {
            const auto m = load_int_matrix(matrix_arg);
            const auto g = cokernel(m);
            emit(cfg, "cokernel", Json{{"matrix", to_json(m)}, {"cokernel", to_json(g)}}, to_string(g) + "\n");
        };
    });

    auto* validate_cmd = app.add_subcommand("validate", "Re-derive the flags of a JSON report and compare");
    validate_cmd->add_option("report", file_arg, "Report file, or - for stdin")->required();
    validate_cmd->callback([&] {
        action = [&] {
            std::string text;
            if (file_arg == "-") {
                std::stringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                text = read_file(file_arg);
            }
            Json report;
            try {
                report = Json::parse(text);
            } catch (const Json::parse_error& e) {
                throw PreconditionError(std::string("report JSON: ") + e.what());
            }
            const Json rebuilt = revalidate(report);
            if (rebuilt.dump() != report.dump()) {
                std::cout << rebuilt.dump(2) << "\n";
                throw PreconditionError("report does not re-validate");
            }
            std::cout << "valid\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUser;
    }

    try {
        if (action) action();
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
