// rankeq: command-line front end for the matrix-code equivalence toolkit.
//
// Exit codes: 0 success / equivalent, 10 not equivalent, 11 invalid promise,
// 1 usage or IO error, 2 malformed instance.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankeq/equiv.hpp"
#include "rankeq/io.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/reduction.hpp"

namespace {

using namespace rankeq;

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 10;
constexpr int kExitInvalidPromise = 11;
constexpr int kExitUsage = 1;
constexpr int kExitMalformed = 2;

// Splits q into (p, e) with q = p^e, p prime.
std::pair<std::uint64_t, std::uint64_t> parse_q(std::uint64_t q) {
    if (q < 2) throw std::runtime_error("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    std::uint64_t e = 0, r = q;
    while (r > 1) {
        if (r % p != 0)
            throw std::runtime_error("q = " + std::to_string(q) +
                                     " is not a prime power");
        r /= p;
        ++e;
    }
    return {p, e};
}

FqPtr field_from_q(std::uint64_t q, Rng& rng) {
    auto [p, e] = parse_q(q);
    return make_field(p, e, std::nullopt, &rng);
}

MatFq random_full_rank(const FqPtr& field, int k, int n, Rng& rng) {
    while (true) {
        MatFq g = random_matrix(field, k, n, rng);
        if (mat_rank(g) == k) return g;
    }
}

int cmd_gen_mcode(std::uint64_t q, int m, int n, int dim, std::uint64_t seed,
                  const std::string& out) {
    Rng rng(seed);
    FqPtr field = field_from_q(q, rng);
    save_mcode(out, gen_random_code(field, m, n, dim, rng));
    return kExitOk;
}

int cmd_gen_pair(const std::string& kind, std::uint64_t q, int m, int n,
                 int dim, int k, std::uint64_t seed,
                 const std::string& prefix) {
    Rng rng(seed);
    if (kind == "right-equiv") {
        FqPtr field = field_from_q(q, rng);
        MatrixCode c = gen_random_code(field, m, n, dim, rng);
        MatFq q0 = random_invertible(field, n, rng);
        save_mcode(prefix + ".C.mc", c);
        save_mcode(prefix + ".D.mc", mul_right(c, q0));
        Witness w;
        w.right = q0;
        save_witness(prefix + ".wit", field, w);
        return kExitOk;
    }
    if (kind == "fqm") {
        auto [p, e] = parse_q(q);
        if (e != 1) throw std::runtime_error("--kind fqm takes a prime --q");
        FqmInstance inst = gen_fqm_instance(k, n, m, p, rng);
        save_mcode(prefix + ".C.mc", inst.expanded);
        save_mcode(prefix + ".D.mc", inst.scrambled);
        save_vcode(prefix + ".V.vc", inst.vec);
        Witness w;
        w.left = inst.P;
        w.right = inst.Q;
        save_witness(prefix + ".wit", inst.expanded.field(), w);
        return kExitOk;
    }
    if (kind == "monomial") {
        FqPtr field = field_from_q(q, rng);
        // Zero columns carry no monomial information and break witness
        // extraction on the reduced instance; redraw until none remain.
        MatFq b = random_full_rank(field, k, n, rng);
        for (;;) {
            bool zero_col = false;
            for (int j = 0; j < n && !zero_col; ++j) {
                bool all = true;
                for (int i = 0; i < k; ++i)
                    if (b.at(i, j) != 0) all = false;
                zero_col = all;
            }
            if (!zero_col) break;
            b = random_full_rank(field, k, n, rng);
        }
        MatFq s = random_invertible(field, k, rng);
        MatFq dg(field, n, n);
        for (int j = 0; j < n; ++j) dg.at(j, j) = field->random_nonzero(rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = n - 1; j > 0; --j)
            std::swap(perm[j], perm[rng.below(j + 1)]);
        MatFq pm(field, n, n);
        for (int j = 0; j < n; ++j) pm.at(perm[j], j) = 1;
        MatFq a = mat_mul(mat_mul(s, b), mat_mul(dg, pm));
        save_gmat(prefix + ".A.gm", a);
        save_gmat(prefix + ".B.gm", b);
        return kExitOk;
    }
    if (kind == "negative") {
        FqPtr field = field_from_q(q, rng);
        MatrixCode c = gen_random_code(field, m, n, dim, rng);
        MatrixCode d = gen_random_code(field, m, n, dim, rng);
        while (d == c) d = gen_random_code(field, m, n, dim, rng);
        save_mcode(prefix + ".C.mc", c);
        save_mcode(prefix + ".D.mc", d);
        return kExitOk;
    }
    throw std::runtime_error("unknown pair kind: " + kind);
}

int report_outcome(const SolveOutcome& out, const MatrixCode& c,
                   const MatrixCode& d, const std::string& witness_path) {
    switch (out.verdict) {
        case Verdict::Equivalent:
            if (!out.witness || !verify_witness(c, d, *out.witness)) {
                std::cerr << "internal error: unverified witness\n";
                return kExitMalformed;
            }
            std::cout << "equivalent\n";
            if (!witness_path.empty())
                save_witness(witness_path, c.field(), *out.witness);
            return kExitOk;
        case Verdict::NotEquivalent:
            std::cout << "not equivalent\n";
            return kExitNotEquivalent;
        case Verdict::InvalidPromise:
            std::cout << "invalid promise\n";
            if (!out.reason.empty()) std::cerr << out.reason << '\n';
            return kExitInvalidPromise;
    }
    return kExitUsage;
}

int cmd_solve_mcre(const std::string& cpath, const std::string& dpath,
                   const std::string& wpath, std::uint64_t seed) {
    MatrixCode c = load_mcode(cpath), d = load_mcode(dpath);
    Rng rng(seed);
    return report_outcome(solve_mcre(c, d, rng), c, d, wpath);
}

int cmd_solve_hvmce(const std::string& cpath, const std::string& dpath,
                    const std::string& wpath, std::uint64_t seed,
                    bool try_transpose) {
    MatrixCode c = load_mcode(cpath), d = load_mcode(dpath);
    Rng rng(seed);
    SolveOutcome out = solve_hvmce(c, d, rng);
    if (out.verdict != Verdict::Equivalent && try_transpose &&
        d.m() == d.n()) {
        std::vector<MatFq> tb;
        for (const auto& g : d.basis()) tb.push_back(transpose(g));
        MatrixCode dt(d.field(), d.n(), d.m(), tb);
        SolveOutcome out_t = solve_hvmce(c, dt, rng);
        if (out_t.verdict == Verdict::Equivalent) {
            std::cout << "equivalent to transpose\n";
            return report_outcome(out_t, c, dt, wpath);
        }
    }
    return report_outcome(out, c, d, wpath);
}

int cmd_solve_mce_brute(const std::string& cpath, const std::string& dpath,
                        const std::string& wpath) {
    MatrixCode c = load_mcode(cpath), d = load_mcode(dpath);
    auto pq = brute_mce(c, d);
    if (!pq) {
        std::cout << "not equivalent\n";
        return kExitNotEquivalent;
    }
    Witness w;
    w.left = pq->first;
    w.right = pq->second;
    SolveOutcome out;
    out.verdict = Verdict::Equivalent;
    out.witness = w;
    return report_outcome(out, c, d, wpath);
}

int cmd_reduce(const std::string& apath, const std::string& bpath,
               const std::string& prefix) {
    MatFq a = load_gmat(apath), b = load_gmat(bpath);
    ReductionInstance inst = reduce_me_to_mce(a, b);
    save_mcode(prefix + ".C.mc", inst.c);
    save_mcode(prefix + ".D.mc", inst.d);
    save_gmat(prefix + ".A.gm", inst.a);
    save_gmat(prefix + ".B.gm", inst.b);
    std::ofstream meta(prefix + ".meta");
    if (!meta) throw std::runtime_error("cannot write " + prefix + ".meta");
    meta << "# retained columns: <original index in A> <original index in B>\n";
    for (std::size_t i = 0; i < inst.cols_a.size(); ++i)
        meta << inst.cols_a[i] << ' ' << inst.cols_b[i] << '\n';
    return kExitOk;
}

int cmd_extract(const std::string& upath, const std::string& vpath,
                const std::string& meta_path) {
    if (meta_path.size() < 5 ||
        meta_path.substr(meta_path.size() - 5) != ".meta")
        throw std::runtime_error("expected a .meta path");
    std::string prefix = meta_path.substr(0, meta_path.size() - 5);
    MatFq u = load_gmat(upath), v = load_gmat(vpath);
    MatFq a = load_gmat(prefix + ".A.gm"), b = load_gmat(prefix + ".B.gm");
    std::ifstream meta(meta_path);
    if (!meta) throw std::runtime_error("cannot open " + meta_path);
    std::vector<int> cols_a, cols_b;
    std::string line;
    while (std::getline(meta, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int ca, cb;
        if (!(ss >> ca >> cb)) throw ParseError("bad meta line: " + line);
        cols_a.push_back(ca);
        cols_b.push_back(cb);
    }
    if (static_cast<int>(cols_a.size()) != a.cols())
        throw ParseError("meta column count does not match A");
    ReductionInstance inst = reduce_me_to_mce(a, b);
    MonomialWitness mw;
    try {
        mw = extract_monomial(u, v, inst);
    } catch (const NotAWitness& ex) {
        std::cout << "not a witness\n";
        std::cerr << ex.what() << '\n';
        return kExitNotEquivalent;
    }
    std::cout << "monomial equivalence\n";
    for (std::size_t i = 0; i < mw.perm.size(); ++i)
        std::cout << "column " << cols_a[i] << " -> " << cols_b[mw.perm[i]]
                  << " scalar " << mw.scalars[i] << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& cpath, const std::string& dpath,
               const std::string& wpath) {
    MatrixCode c = load_mcode(cpath), d = load_mcode(dpath);
    auto [field, w] = load_witness(wpath);
    if (*field != *c.field()) throw ParseError("witness field mismatch");
    if (verify_witness(c, d, w)) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid\n";
    return kExitNotEquivalent;
}

int cmd_stab(const std::string& cpath, std::uint64_t seed) {
    MatrixCode c = load_mcode(cpath);
    Rng rng(seed);
    MatAlgebra sl = left_stabilizer(c);
    MatAlgebra sr = right_stabilizer(c);
    std::cout << "dim stab_l " << sl.dim() << '\n';
    std::cout << "dim stab_r " << sr.dim() << '\n';
    for (const auto* s : {&sl, &sr}) {
        const char* name = (s == &sl) ? "stab_l" : "stab_r";
        std::cout << name << " center dim " << center(*s).dim() << '\n';
        std::cout << name << " radical dim " << radical(*s).dim() << '\n';
        std::cout << name << " components";
        for (auto [u, v] : component_profile(*s, rng))
            std::cout << " (" << u << "," << v << ")";
        std::cout << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric code equivalence toolkit"};
    app.require_subcommand(1);

    std::uint64_t q = 2, seed = 1;
    int m = 3, n = 3, dim = 2, k = 1;
    std::string kind, out, prefix;
    std::string path_a, path_b, path_c;
    bool try_transpose = false;

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    auto* gen_mcode = gen->add_subcommand("mcode", "one random matrix code");
    gen_mcode->add_option("--q", q, "field size (prime power)")->required();
    gen_mcode->add_option("--m", m)->required();
    gen_mcode->add_option("--n", n)->required();
    gen_mcode->add_option("--dim", dim)->required();
    gen_mcode->add_option("--seed", seed);
    gen_mcode->add_option("-o", out, "output file")->required();

    auto* gen_pair = gen->add_subcommand("pair", "an instance pair");
    gen_pair
        ->add_option("--kind", kind,
                     "right-equiv | fqm | monomial | negative")
        ->required();
    gen_pair->add_option("--q", q,
                         "field size (the prime base field for fqm)")
        ->required();
    gen_pair->add_option("--m", m, "rows (extension degree for fqm)");
    gen_pair->add_option("--n", n, "columns / code length");
    gen_pair->add_option("--dim", dim, "matrix code dimension");
    gen_pair->add_option("--k", k, "vector code dimension");
    gen_pair->add_option("--seed", seed);
    gen_pair->add_option("-o", prefix, "output prefix")->required();

    auto* solve = app.add_subcommand("solve", "decide equivalence");
    solve->require_subcommand(1);
    auto* s_mcre = solve->add_subcommand("mcre", "right equivalence");
    s_mcre->add_option("C", path_a)->required();
    s_mcre->add_option("D", path_b)->required();
    s_mcre->add_option("-o", out, "witness output");
    s_mcre->add_option("--seed", seed);
    auto* s_hv = solve->add_subcommand("hvmce", "hidden-basis expansions");
    s_hv->add_option("C", path_a)->required();
    s_hv->add_option("D", path_b)->required();
    s_hv->add_option("-o", out, "witness output");
    s_hv->add_option("--seed", seed);
    s_hv->add_flag("--try-transpose", try_transpose,
                   "also try the transposed D when square");
    auto* s_mce = solve->add_subcommand("mce-brute", "exhaustive two-sided");
    s_mce->add_option("C", path_a)->required();
    s_mce->add_option("D", path_b)->required();
    s_mce->add_option("-o", out, "witness output");

    auto* reduce = app.add_subcommand("reduce", "problem reductions");
    reduce->require_subcommand(1);
    auto* red = reduce->add_subcommand(
        "me2mce", "monomial equivalence to matrix code equivalence");
    red->add_option("A", path_a)->required();
    red->add_option("B", path_b)->required();
    red->add_option("-o", prefix, "output prefix")->required();

    auto* extract =
        app.add_subcommand("extract", "monomial map from an MCE witness");
    extract->add_option("U", path_a)->required();
    extract->add_option("V", path_b)->required();
    extract->add_option("META", path_c, "the .meta file from reduce")
        ->required();

    auto* verify = app.add_subcommand("verify", "check a witness file");
    verify->add_option("C", path_a)->required();
    verify->add_option("D", path_b)->required();
    verify->add_option("W", path_c)->required();

    auto* stab = app.add_subcommand("stab", "stabilizer algebra report");
    stab->add_option("C", path_a)->required();
    stab->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_mcode->parsed())
            return cmd_gen_mcode(q, m, n, dim, seed, out);
        if (gen_pair->parsed())
            return cmd_gen_pair(kind, q, m, n, dim, k, seed, prefix);
        if (s_mcre->parsed()) return cmd_solve_mcre(path_a, path_b, out, seed);
        if (s_hv->parsed())
            return cmd_solve_hvmce(path_a, path_b, out, seed, try_transpose);
        if (s_mce->parsed()) return cmd_solve_mce_brute(path_a, path_b, out);
        if (red->parsed()) return cmd_reduce(path_a, path_b, prefix);
        if (extract->parsed()) return cmd_extract(path_a, path_b, path_c);
        if (verify->parsed()) return cmd_verify(path_a, path_b, path_c);
        if (stab->parsed()) return cmd_stab(path_a, seed);
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rankeq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
