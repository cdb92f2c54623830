/**
 * shiftlab command line: algebraic shifting of simplicial complexes plus
 * the companion invariants, and a named verification harness for the
 * library's headline theorems.
 *
 * Exit codes: 0 ok, 1 parse error, 2 generic instability, 3 bad flags or
 * unknown check (verify also exits 4 when some check fails).
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <shiftlab/shiftlab.hpp>

using namespace shiftlab;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SimplicialComplex load_complex(const std::string& path)
{
    return parse_complex(read_file(path));
}

std::uint64_t default_prime()
{
    if (const char* env = std::getenv("SHIFTLAB_PRIME"))
        return std::strtoull(env, nullptr, 10);
    return (1ULL << 31) - 1;
}

GenericConfig make_config(std::uint64_t prime, std::uint64_t seed)
{
    GenericConfig cfg;
    cfg.prime = prime;
    cfg.seed1 = seed;
    cfg.seed2 = mix_seeds(seed, 0x5eedf00dULL);
    return cfg;
}

json shift_result_json(const ShiftResult& R)
{
    json j = complex_to_json(R.shifted);
    j["variant"] = variant_name(R.variant);
    j["prime"] = R.prime;
    j["seeds"] = {R.seeds.first, R.seeds.second};
    j["stable"] = R.stable;
    j["attempts"] = R.attempts;
    j["fvector"] = R.shifted.f_vector();
    return j;
}

// ---------------------------------------------------------------------------
// verify checks
// ---------------------------------------------------------------------------

struct CheckContext {
    std::uint64_t seed;
    GenericConfig cfg;
};

SimplicialComplex rnd_complex(SplitMix64& rng, int n, int max_facets, int max_size)
{
    std::vector<Face> facets;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_facets)));
    for (int t = 0; t < count; ++t) {
        int k = 1 + static_cast<int>(
                        rng.below(static_cast<std::uint64_t>(std::min(max_size, n))));
        std::set<Vertex> s;
        while (static_cast<int>(s.size()) < k)
            s.insert(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        facets.emplace_back(s.begin(), s.end());
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex rnd_graph(SplitMix64& rng, int n, int percent)
{
    std::vector<Face> facets;
    for (Vertex v = 1; v <= n; ++v)
        facets.push_back({v});
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex u = v + 1; u <= n; ++u)
            if (rng.below(100) < static_cast<std::uint64_t>(percent))
                facets.push_back({v, u});
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex rnd_triangulation(SplitMix64& rng, int nverts)
{
    SimplicialComplex K = boundary_simplex(3);
    while (K.ground_size() < nverts) {
        bool at_edge = rng.below(2) == 0;
        const auto& pool = K.faces_of_size(at_edge ? 2 : 3);
        K = stellar_subdivision(K, pool[rng.below(pool.size())]);
    }
    return K;
}

SimplicialComplex span_of(int n, const std::vector<Face>& gens)
{
    std::vector<Face> out;
    for (const auto& g : gens)
        for (const auto& T : k_subsets(range_vertices(n), static_cast<int>(g.size())))
            if (dominates(T, g))
                out.push_back(T);
    return SimplicialComplex::from_facets(n, std::move(out));
}

bool check_disjoint_union(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    for (int t = 0; t < 5; ++t) {
        auto K = rnd_complex(rng, 4, 3, 3);
        auto L = rnd_complex(rng, 4, 3, 3);
        for (auto v : {ShiftVariant::Exterior, ShiftVariant::Symmetric}) {
            auto lhs = algebraic_shift(disjoint_union(K, L), v, ctx.cfg).shifted;
            auto rhs = algebraic_shift(disjoint_union(algebraic_shift(K, v, ctx.cfg).shifted,
                                                      algebraic_shift(L, v, ctx.cfg).shifted),
                                       v, ctx.cfg)
                           .shifted;
            if (lhs != rhs) {
                details["variant"] = variant_name(v);
                return false;
            }
        }
    }
    details["pairs"] = 5;
    return true;
}

bool check_cone_commute(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    for (int t = 0; t < 5; ++t) {
        auto K = rnd_complex(rng, 6, 4, 4);
        if (exterior_shift(cone(K), ctx.cfg).shifted !=
            cone(exterior_shift(K, ctx.cfg).shifted))
            return false;
    }
    details["samples"] = 5;
    return true;
}

bool check_stacked_sphere(const CheckContext& ctx, json& details)
{
    for (int n = 5; n <= 7; ++n) {
        auto expect = span_of(n, {{1, 3, n}, {2, 3, 4}});
        auto K = stacked_sphere(3, n);
        if (exterior_shift(K, ctx.cfg).shifted != expect)
            return false;
        if (symmetric_shift(K, ctx.cfg).shifted != expect)
            return false;
    }
    details["range"] = "n=5..7";
    return true;
}

bool check_clique_sum(const CheckContext& ctx, json& details)
{
    // union over a common simplex: the D-value membership formula
    Face sigma{4, 5};
    auto K = SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4}, {4, 5}});
    auto L = SimplicialComplex::from_facets(8, {{4, 5}, {4, 6}, {5, 7, 8}, {6, 7}});
    auto Un = SimplicialComplex::from_facets(8, [&] {
        auto f = K.facets();
        for (const auto& g : L.facets())
            f.push_back(g);
        return f;
    }());
    auto DU = exterior_shift(Un, ctx.cfg).shifted;
    auto DK = exterior_shift(K, ctx.cfg).shifted;
    auto DL = exterior_shift(L, ctx.cfg).shifted;
    auto Ds = complete_complex(2);
    for (int k = 1; k <= DU.dim() + 1; ++k)
        for (const auto& T : k_subsets(range_vertices(8), k)) {
            Face prefix(T.begin(), T.end() - 1);
            auto dv = [&](const SimplicialComplex& C) {
                return static_cast<std::int64_t>(interval_faces(C, prefix, 1).size());
            };
            Vertex prev = T.size() >= 2 ? T[T.size() - 2] : 0;
            if (DU.has_face(T) != (T.back() - prev <= dv(DK) + dv(DL) - dv(Ds)))
                return false;
        }
    details["instance"] = "K ∪_{45} L on 8 vertices";
    return true;
}

bool check_join_max_faces(const CheckContext& ctx, json& details)
{
    auto K = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
    auto L = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    auto J = join(K, L);
    auto DJ = exterior_shift(J, ctx.cfg).shifted;
    auto DK = exterior_shift(K, ctx.cfg).shifted;
    auto DL = exterior_shift(L, ctx.cfg).shifted;
    auto count = [](const SimplicialComplex& D, int i, int top) {
        std::int64_t c = 0;
        for (const auto& S : D.faces_of_size(top))
            if (S[0] > i)
                ++c;
        return c;
    };
    for (int i = 0; i <= J.ground_size(); ++i)
        if (count(DJ, i, J.dim() + 1) !=
            count(DK, i, K.dim() + 1) * count(DL, i, L.dim() + 1))
            return false;
    details["instance"] = "triangle * two disjoint edges";
    return true;
}

bool check_join_counterexample(const CheckContext& ctx, json& details)
{
    auto B = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    for (auto v : {ShiftVariant::Exterior, ShiftVariant::Symmetric}) {
        auto DB = algebraic_shift(B, v, ctx.cfg).shifted;
        auto D1 = algebraic_shift(suspension(B), v, ctx.cfg).shifted;
        auto D2 = algebraic_shift(suspension(DB), v, ctx.cfg).shifted;
        std::set<Face> f1, f2;
        for (int k = 1; k <= D1.dim() + 1; ++k)
            for (const auto& f : D1.faces_of_size(k))
                f1.insert(f);
        for (int k = 1; k <= D2.dim() + 1; ++k)
            for (const auto& f : D2.faces_of_size(k))
                f2.insert(f);
        std::vector<Face> only1, only2;
        std::set_difference(f1.begin(), f1.end(), f2.begin(), f2.end(),
                            std::back_inserter(only1));
        std::set_difference(f2.begin(), f2.end(), f1.begin(), f1.end(),
                            std::back_inserter(only2));
        if (only1 != std::vector<Face>{{1, 2, 6}} ||
            only2 != std::vector<Face>{{1, 3, 4}})
            return false;
        if (lex_compare_complexes(D1, D2) != LexOrder::KFirst)
            return false;
        details[variant_name(v)] = {{"only_in_shift_of_SB", only1},
                                    {"only_in_shift_of_SDB", only2}};
    }
    return true;
}

bool check_k33_gap(const CheckContext& ctx, json& details)
{
    auto K33 = complete_bipartite(3, 3);
    bool e = exterior_shift(K33, ctx.cfg).shifted.has_face({3, 4});
    bool s = symmetric_shift(K33, ctx.cfg).shifted.has_face({3, 4});
    details["exterior_has_34"] = e;
    details["symmetric_has_34"] = s;
    return e && !s;
}

bool check_ubt_cyclic(const CheckContext& ctx, json& details)
{
    for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 7}}) {
        auto C = cyclic_boundary(d, n);
        auto U = ubt_complex(d, n);
        if (symmetric_shift(C, ctx.cfg).shifted != U)
            return false;
        if (exterior_shift(C, ctx.cfg).shifted != U)
            return false;
    }
    details["cases"] = {"(2,6)", "(3,7)"};
    return true;
}

bool check_gluck(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    for (int t = 0; t < 6; ++t) {
        auto K = rnd_triangulation(rng, 6 + t % 4);
        if (!is_stress_free(skeleton(K, 1), 3, ctx.cfg))
            return false;
    }
    details["triangulations"] = 6;
    return true;
}

bool check_lee_equivalence(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    for (int t = 0; t < 8; ++t) {
        auto G = rnd_graph(rng, 5 + t % 2, 50);
        for (int d : {2, 3})
            if (!lee_crosscheck(G, d, ctx.cfg).agree)
                return false;
    }
    details["graphs"] = 8;
    return true;
}

bool check_near_cone(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    int done = 0;
    for (int t = 0; t < 8; ++t) {
        auto L = rnd_complex(rng, 4, 4, 3);
        std::vector<Face> facets;
        for (const auto& f : L.facets()) {
            Face g{1};
            for (Vertex v : f)
                g.push_back(v + 1);
            facets.push_back(g);
        }
        auto K = SimplicialComplex::from_facets(L.ground_size() + 1, facets);
        if (!is_near_cone(K, 1))
            return false;
        if (!near_cone_decomposition_check(K, 1, ctx.cfg))
            return false;
        ++done;
    }
    details["near_cones"] = done;
    return true;
}

bool check_sarkaria(const CheckContext& ctx, json& details)
{
    PrimeField F(ctx.cfg.prime);
    auto K = cone(boundary_simplex(2));
    auto U = sarkaria_U(K, 1, F);
    int n = K.ground_size();
    std::vector<fp_t> ones(static_cast<std::size_t>(n), 1);
    std::vector<fp_t> apex(static_cast<std::size_t>(n), 0);
    apex[0] = 1;
    std::vector<fp_t> alpha;
    for (int i = 0; i < n; ++i)
        alpha.push_back(static_cast<fp_t>(7 + 2 * i));
    auto ev = interior_product(K, apex, F);
    auto e = interior_product(K, ones, F);
    auto fa = interior_product(K, alpha, F);
    auto D = sarkaria_D(K, alpha, F);
    auto mul = [&](const FpMatrix& A, const FpMatrix& B) {
        FpMatrix C(F, A.rows(), B.cols());
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t k = 0; k < A.cols(); ++k)
                if (A.at(i, k) != 0)
                    for (std::size_t j = 0; j < B.cols(); ++j)
                        C.at(i, j) = F.add(C.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
        return C;
    };
    auto eq = [&](const FpMatrix& A, const FpMatrix& B) {
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (A.at(i, j) != B.at(i, j))
                    return false;
        return true;
    };
    for (int k = 1; k <= K.dim() + 1; ++k) {
        std::size_t kk = static_cast<std::size_t>(k);
        if (!eq(mul(U.per_size[kk - 1], ev[kk - 1]), mul(e[kk - 1], U.per_size[kk])))
            return false;
        if (!eq(mul(D.per_size[kk - 1], e[kk - 1]), mul(fa[kk - 1], D.per_size[kk])))
            return false;
    }
    details["complex"] = "cone over the triangle boundary";
    return true;
}

bool check_minor_mainthm(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    int hits = 0;
    for (int t = 0; t < 10; ++t) {
        auto G = rnd_graph(rng, 6 + t % 3, 55);
        for (int r : {4, 5}) {
            Face probe{r - 1, r};
            bool in_e = exterior_shift(G, ctx.cfg).shifted.has_face(probe);
            bool in_s = symmetric_shift(G, ctx.cfg).shifted.has_face(probe);
            if (in_e || in_s) {
                ++hits;
                if (!has_clique_minor(G, r).witness)
                    return false;
            }
        }
    }
    details["instances_with_face"] = hits;
    return true;
}

bool check_smith_hd(const CheckContext&, json& details)
{
    bool ok = !smith_class(h_d_skeleton(1), 1).vanishes &&
              !smith_class(complete_graph(5), 3).vanishes &&
              smith_class(complete_graph(4), 3).vanishes &&
              !vk_vanishes_Z(complete_graph(5), 2) &&
              vk_vanishes_Z(complete_graph(4), 2);
    details["H1_m1_nonzero"] = !smith_class(h_d_skeleton(1), 1).vanishes;
    details["K5_m3_nonzero"] = !smith_class(complete_graph(5), 3).vanishes;
    details["K4_m3_vanishes"] = smith_class(complete_graph(4), 3).vanishes;
    return ok;
}

bool check_hcontract_identity(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    int done = 0;
    for (int t = 0; t < 12 && done < 5; ++t) {
        auto K = rnd_triangulation(rng, 7);
        for (const auto& e : K.faces_of_size(2)) {
            if (!satisfies_link_condition(K, e[0], e[1]))
                continue;
            auto Kp = contract(K, e[1], e[0]);
            auto h = K.h_vector();
            auto hp = Kp.h_vector();
            auto hl = link(K, e).h_vector();
            hp.resize(h.size(), 0);
            for (std::size_t i = 0; i < hl.size(); ++i)
                hp[i + 1] += hl[i];
            if (h != hp)
                return false;
            ++done;
            break;
        }
    }
    details["contractions"] = done;
    return done >= 5;
}

bool check_kk_macaulay(const CheckContext& ctx, json& details)
{
    SplitMix64 rng(ctx.seed);
    if (kk_lower_shadow(4, 2) != 6 || macaulay_lower(10, 2) != 6)
        return false;
    for (int t = 0; t < 10; ++t)
        if (!satisfies_kk(rnd_complex(rng, 8, 5, 4).f_vector()))
            return false;
    if (!is_m_sequence(octahedron().g_vector()))
        return false;
    if (satisfies_kk({1, 2, 2}))
        return false;
    details["sampled"] = 10;
    return true;
}

int run_verify(const std::string& name, std::uint64_t seed)
{
    using Check = bool (*)(const CheckContext&, json&);
    std::vector<std::pair<std::string, Check>> checks{
        {"disjoint-union", check_disjoint_union},
        {"cone-commute", check_cone_commute},
        {"stacked-sphere", check_stacked_sphere},
        {"clique-sum", check_clique_sum},
        {"join-max-faces", check_join_max_faces},
        {"join-counterexample", check_join_counterexample},
        {"k33-gap", check_k33_gap},
        {"ubt-cyclic", check_ubt_cyclic},
        {"gluck", check_gluck},
        {"lee-equivalence", check_lee_equivalence},
        {"near-cone", check_near_cone},
        {"sarkaria", check_sarkaria},
        {"minor-mainthm", check_minor_mainthm},
        {"smith-hd", check_smith_hd},
        {"hcontract-identity", check_hcontract_identity},
        {"kk-macaulay", check_kk_macaulay},
    };
    bool any = false;
    int failures = 0;
    CheckContext ctx{seed, make_config(default_prime(), seed)};
    for (const auto& [cname, fn] : checks) {
        if (name != "all" && name != cname)
            continue;
        any = true;
        json line;
        line["check"] = cname;
        line["seed"] = seed;
        json details = json::object();
        bool pass = false;
        try {
            pass = fn(ctx, details);
        } catch (const std::exception& e) {
            details["error"] = e.what();
        }
        line["pass"] = pass;
        line["details"] = details;
        std::cout << line.dump() << "\n";
        if (!pass)
            ++failures;
    }
    if (!any) {
        std::cerr << "unknown check name: " << name << "\n";
        return 3;
    }
    return failures ? 4 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"algebraic shifting of simplicial complexes and friends"};
    app.require_subcommand(1);

    std::string file, target_file, variant = "ext", check_name = "all", obk;
    std::uint64_t prime = default_prime();
    std::uint64_t seed = 20251;
    int dim = 3, m = 1;
    std::size_t budget = 500000;
    int cu = 0, cv = 0;

    auto* shift = app.add_subcommand("shift", "algebraic shifting of a complex");
    shift->add_option("file", file)->required();
    shift->add_option("--variant", variant)->check(CLI::IsMember({"ext", "sym"}));
    shift->add_option("--prime", prime);
    shift->add_option("--seed", seed);

    auto* fvec = app.add_subcommand("fvector", "f-, h- and g-vectors");
    fvec->add_option("file", file)->required();

    auto* bet = app.add_subcommand("betti", "reduced Betti numbers over F_p");
    bet->add_option("file", file)->required();
    bet->add_option("--prime", prime);

    auto* rig = app.add_subcommand("rigidity", "generic rigidity of a graph");
    rig->add_option("file", file)->required();
    rig->add_option("--dim", dim);
    rig->add_option("--prime", prime);
    rig->add_option("--seed", seed);

    auto* obs = app.add_subcommand("obstruction", "smith / van Kampen obstructions");
    obs->add_option("kind", obk)->required()->check(CLI::IsMember({"smith", "vk"}));
    obs->add_option("file", file)->required();
    obs->add_option("--m", m)->required();

    auto* minor = app.add_subcommand("minor", "search for a minor");
    minor->add_option("file", file)->required();
    minor->add_option("--target", target_file)->required();
    minor->add_option("--budget", budget);

    auto* contr = app.add_subcommand("contract", "contract u onto v");
    contr->add_option("file", file)->required();
    contr->add_option("u", cu)->required();
    contr->add_option("v", cv)->required();

    auto* ver = app.add_subcommand("verify", "run a named theorem check");
    ver->add_option("name", check_name)->required();
    ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (*shift) {
            auto K = load_complex(file);
            auto cfg = make_config(prime, seed);
            ShiftResult R = algebraic_shift(
                K, variant == "ext" ? ShiftVariant::Exterior : ShiftVariant::Symmetric,
                cfg);
            std::cout << shift_result_json(R).dump(2) << "\n";
        } else if (*fvec) {
            auto K = load_complex(file);
            json j;
            j["fvector"] = K.f_vector();
            j["hvector"] = K.h_vector();
            if (K.dim() >= 0)
                j["gvector"] = K.g_vector();
            std::cout << j.dump(2) << "\n";
        } else if (*bet) {
            auto K = load_complex(file);
            auto b = betti(K, prime);
            json j;
            j["prime"] = prime;
            j["betti"] = b.beta;
            j["beta_minus1"] = b.beta_minus1;
            std::cout << j.dump(2) << "\n";
        } else if (*rig) {
            auto G = load_complex(file);
            auto cfg = make_config(prime, seed);
            json j;
            j["dim"] = dim;
            j["rank"] = rigidity_rank(G, dim, cfg);
            j["rigid"] = is_generically_rigid(G, dim, cfg);
            j["stress_free"] = is_stress_free(G, dim, cfg);
            j["stress_space_dim"] = stress_space_dim(G, dim, cfg);
            std::cout << j.dump(2) << "\n";
        } else if (*obs) {
            auto K = load_complex(file);
            json j;
            j["m"] = m;
            if (obk == "smith") {
                auto s = smith_class(K, m);
                j["vanishes"] = s.vanishes;
                j["dimension_exhausted"] = s.dimension_exhausted;
                j["cocycle_nonzero"] = s.cocycle_nonzero;
            } else {
                j["vanishes"] = vk_vanishes_Z(K, m);
                j["symmetry"] = (m % 2 == 0) ? "symmetric" : "antisymmetric";
                j["note"] = "solved within the fixed symmetry-type subcomplex";
            }
            std::cout << j.dump(2) << "\n";
        } else if (*minor) {
            auto K = load_complex(file);
            auto H = load_complex(target_file);
            auto res = is_minor(H, K, budget);
            json j;
            j["found"] = res.witness.has_value();
            j["exhaustive"] = res.exhaustive;
            j["expanded"] = res.expanded;
            if (res.witness) {
                json steps = json::array();
                for (const auto& s : res.witness->steps) {
                    if (s.kind == MinorStep::Kind::DeleteFacet)
                        steps.push_back({{"delete", s.facet}});
                    else
                        steps.push_back({{"contract", {s.u, s.v}}});
                }
                j["witness"] = steps;
            }
            std::cout << j.dump(2) << "\n";
        } else if (*contr) {
            auto K = load_complex(file);
            auto K2 = contract(K, cu, cv);
            json j = complex_to_json(K2);
            j["admissible"] = is_admissible(K, cu, cv);
            std::cout << j.dump(2) << "\n";
        } else if (*ver) {
            return run_verify(check_name, seed);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const GenericInstability& e) {
        std::cerr << "generic instability: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
