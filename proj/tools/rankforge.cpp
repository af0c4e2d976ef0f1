// rankforge: generate, canonicalize, verify, and certify matrix rank
// identities over exact coefficient fields, plus finite von Neumann model
// experiments. Every subcommand is deterministic for a fixed argv: reports
// carry no timestamps and all randomness flows from --seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankforge/divlattice.hpp"
#include "rankforge/error.hpp"
#include "rankforge/exactmat.hpp"
#include "rankforge/field.hpp"
#include "rankforge/fmonoid.hpp"
#include "rankforge/freealg.hpp"
#include "rankforge/identgen.hpp"
#include "rankforge/poly.hpp"
#include "rankforge/rng.hpp"
#include "rankforge/vnrank.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rankforge;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

std::vector<Poly> parse_poly_list(const std::string& text, char sep,
                                  const FieldSpec& spec) {
    std::vector<Poly> out;
    for (const std::string& chunk : split(text, sep))
        out.push_back(Poly::parse(chunk, spec));
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const char* what) {
    std::vector<std::size_t> out;
    for (const std::string& chunk : split(text, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(chunk, &pos);
        } catch (const std::exception&) {
            throw Error(std::string("cannot parse ") + what + " entry '" +
                        chunk + "'");
        }
        if (pos != chunk.size())
            throw Error(std::string("cannot parse ") + what + " entry '" +
                        chunk + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<unsigned>> parse_lambda(const std::string& text) {
    std::vector<std::vector<unsigned>> rows;
    for (const std::string& row : split(text, ';')) {
        std::vector<unsigned> entries;
        for (std::size_t v : parse_size_list(row, "exponent"))
            entries.push_back(static_cast<unsigned>(v));
        rows.push_back(std::move(entries));
    }
    return rows;
}

std::vector<std::string> poly_strings(const std::vector<Poly>& polys) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const Poly& p : polys)
        out.push_back(p.to_string());
    return out;
}

ordered_json identity_json(const RankIdentity& id) {
    return ordered_json{{"field", id.field.to_string()},
                        {"lhs", poly_strings(id.lhs)},
                        {"rhs", poly_strings(id.rhs)},
                        {"provenance", id.provenance}};
}

// "rank(q1(A)) + rank(q2(A)) = rank(r1(A)) + rank(r2(A))"
std::string identity_rendering(const RankIdentity& id) {
    auto side = [](const std::vector<Poly>& polys) {
        std::string s;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (i > 0)
                s += " + ";
            s += "rank((" + polys[i].to_string() + ")(A))";
        }
        return s;
    };
    return side(id.lhs) + " = " + side(id.rhs);
}

void emit_report(const ordered_json& j, const std::string& report_path,
                 bool to_stdout = true) {
    const std::string text = j.dump(2) + "\n";
    if (to_stdout)
        std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw Error("cannot open report file '" + report_path + "'");
        out << text;
    }
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("invalid JSON in '" + path + "': " + e.what());
    }
}

RankIdentity identity_from_json(const ordered_json& j,
                                const std::optional<std::string>& field_arg) {
    if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs"))
        throw Error("identity file must be an object with lhs and rhs");
    std::string field_str;
    if (field_arg) {
        field_str = *field_arg;
    } else if (j.contains("field")) {
        field_str = j["field"].get<std::string>();
    } else {
        throw Error("identity file has no field; pass --field");
    }
    const FieldSpec field = FieldSpec::parse(field_str);
    auto parse_side = [&field](const ordered_json& arr) {
        if (!arr.is_array())
            throw Error("identity sides must be arrays of polynomials");
        std::vector<Poly> out;
        for (const auto& entry : arr)
            out.push_back(Poly::parse(entry.get<std::string>(), field));
        return out;
    };
    return RankIdentity{field, parse_side(j["lhs"]), parse_side(j["rhs"]),
                        j.value("provenance", std::string())};
}

// ---------------------------------------------------------------------------
// Subcommand runners. Exit codes: 0 pass, 1 identity/claim failure,
// 2 usage or input error (thrown Error is mapped to 2 in main).

struct GenArgs {
    std::string basis;
    std::string lambda;
    std::string field = "Q";
    std::uint64_t seed = 0;
    std::string report;
};

int run_gen(const GenArgs& args) {
    const FieldSpec field = FieldSpec::parse(args.field);
    ShuffleSpec spec{field, parse_poly_list(args.basis, ';', field),
                     parse_lambda(args.lambda), {}};
    spec.column_perms =
        shuffle_columns(spec.lambda.size(), spec.basis.size(), args.seed);
    RankIdentity id =
        make_identity(spec, "shuffle seed=" + std::to_string(args.seed));
    emit_report(identity_json(id), args.report);
    std::cerr << identity_rendering(id) << "\n";
    return 0;
}

struct CanonArgs {
    std::string polys;
    std::string field = "Q";
    std::string report;
};

int run_canon(const CanonArgs& args) {
    const FieldSpec field = FieldSpec::parse(args.field);
    FMonoidElem canon =
        canonical_form(parse_poly_list(args.polys, ',', field), field);
    emit_report(ordered_json(canon.to_strings()), args.report);
    return 0;
}

struct SnfArgs {
    std::string matrix_path;
    std::string field = "Q";
    std::string report;
};

int run_snf(const SnfArgs& args) {
    const FieldSpec field = FieldSpec::parse(args.field);
    const ordered_json grid = load_json_file(args.matrix_path);
    if (!grid.is_array() || grid.empty())
        throw Error("matrix file must be a nonempty 2-D array of entries");
    const std::size_t rows = grid.size();
    if (!grid[0].is_array() || grid[0].empty())
        throw Error("matrix file must be a nonempty 2-D array of entries");
    const std::size_t cols = grid[0].size();
    PolyMatrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!grid[i].is_array() || grid[i].size() != cols)
            throw Error("matrix rows must all have the same length");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Poly::parse(grid[i][j].get<std::string>(), field);
    }
    SnfResult snf = smith_normal_form(m);
    ordered_json j{{"field", field.to_string()},
                   {"rows", rows},
                   {"cols", cols},
                   {"factors", poly_strings(snf.factors)},
                   {"u", snf.U.entry_strings()},
                   {"v", snf.V.entry_strings()}};
    emit_report(j, args.report);
    return 0;
}

struct VerifyArgs {
    std::string identity_path;
    std::string builtin;
    std::optional<std::string> field;
    std::size_t trials = 100;
    std::string dims = "2,3,4";
    std::uint64_t seed = 0;
    std::string report;
};

int run_verify(const VerifyArgs& args) {
    RankIdentity id = [&args] {
        if (!args.builtin.empty()) {
            const FieldSpec field = FieldSpec::parse(args.field.value_or("Q"));
            return builtin_identity(args.builtin, field);
        }
        return identity_from_json(load_json_file(args.identity_path),
                                  args.field);
    }();
    const std::vector<std::size_t> dims =
        parse_size_list(args.dims, "dimension");
    VerificationReport report =
        verify_identity(id, args.trials, dims, args.seed);

    ordered_json records = ordered_json::array();
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const TrialRecord& r = report.records[k];
        records.push_back(ordered_json{{"trial", k},
                                       {"seed", r.stream},
                                       {"dim", r.dim},
                                       {"lhs_rank_sum", r.lhs_sum},
                                       {"rhs_rank_sum", r.rhs_sum},
                                       {"pass", r.pass}});
    }
    ordered_json j{
        {"config",
         ordered_json{{"subcommand", "verify"},
                      {"source", args.builtin.empty()
                                     ? "file:" + args.identity_path
                                     : "builtin:" + args.builtin},
                      {"field", id.field.to_string()},
                      {"trials", args.trials},
                      {"dims", dims},
                      {"seed", args.seed}}},
        {"identity", identity_json(id)},
        {"records", records},
        {"all_pass", report.all_pass()}};
    if (report.counterexample)
        j["counterexample"] = report.counterexample->entry_strings();
    emit_report(j, args.report);
    const bool ok = report.all_pass();
    std::cerr << (ok ? "all trials passed\n" : "counterexample found\n");
    return ok ? 0 : 1;
}

struct CertRunArgs {
    std::string name;
    bool all = false;
    std::string field = "Q";
    std::string report;
};

int run_cert_run(const CertRunArgs& args) {
    const FieldSpec field = FieldSpec::parse(args.field);
    const std::vector<std::string> names =
        args.all ? builtin_certificate_names()
                 : std::vector<std::string>{args.name};

    ordered_json results = ordered_json::array();
    std::size_t failures = 0;
    std::size_t width = 0;
    for (const std::string& name : names)
        width = std::max(width, name.size());

    for (const std::string& name : names) {
        std::string status;
        std::string detail;
        try {
            Certificate cert = make_builtin_certificate(name, field);
            CheckResult res = verify_certificate(cert);
            status = res.pass ? "pass" : "fail";
            detail = res.pass ? cert.note : res.failure;
            if (!res.pass)
                ++failures;
        } catch (const CharTwoUnsupported& e) {
            if (!args.all)
                throw; // a direct request for an unsupported certificate
            status = "unsupported";
            detail = e.what();
        }
        results.push_back(ordered_json{
            {"name", name}, {"status", status}, {"detail", detail}});
        std::cout << name << std::string(width - name.size() + 2, ' ')
                  << status << "  " << detail << "\n";
    }
    ordered_json j{{"config", ordered_json{{"subcommand", "cert run"},
                                           {"field", field.to_string()}}},
                   {"results", results}};
    emit_report(j, args.report, /*to_stdout=*/false);
    return failures == 0 ? 0 : 1;
}

struct CertShowArgs {
    std::string name;
    std::string field = "Q";
};

int run_cert_show(const CertShowArgs& args) {
    const FieldSpec field = FieldSpec::parse(args.field);
    Certificate cert = make_builtin_certificate(args.name, field);
    std::cout << cert.name << " (" << cert.n << "x" << cert.n << " over "
              << field.to_string() << ", "
              << (cert.mode == AlgebraMode::Idempotent
                      ? "idempotent e, f"
                      : "free t1, t2")
              << ")\n";
    std::cout << cert.note << "\n\n";
    const std::pair<const char*, const FreeMatrix*> parts[] = {
        {"A", &cert.A},     {"A_inv", &cert.A_inv}, {"B", &cert.B},
        {"B_inv", &cert.B_inv}, {"X", &cert.X},     {"Y", &cert.Y}};
    for (const auto& [label, m] : parts)
        std::cout << label << " =\n" << m->to_string() << "\n";
    return 0;
}

struct VnArgs {
    std::string shape = "2,3";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string report;
};

BlockShape parse_shape(const std::string& text) {
    return BlockShape(parse_size_list(text, "block dimension"));
}

ordered_json vn_config(const char* experiment, const VnArgs& args) {
    return ordered_json{{"subcommand", std::string("vn ") + experiment},
                        {"shape", args.shape},
                        {"trials", args.trials},
                        {"seed", args.seed}};
}

// Nonzero entries only in rows and columns [0, split) of each block
// (low = true), or [split, n) (low = false). Pairs sampled with the same
// splits and opposite halves have orthogonal ranges and co-ranges, so they
// land on the equality side of the subadditivity dichotomy; general pairs
// land on the strict side except in degenerate draws.
BlockAlgebraElem sample_block_supported(const BlockShape& shape,
                                        const std::vector<std::size_t>& split,
                                        bool low, SplitMix64& rng) {
    const FieldSpec field = FieldSpec::gaussian_rationals();
    BlockAlgebraElem out(shape);
    for (std::size_t i = 0; i < shape.blocks(); ++i) {
        const std::size_t lo = low ? 0 : split[i];
        const std::size_t hi = low ? split[i] : shape.dim(i);
        for (std::size_t r = lo; r < hi; ++r)
            for (std::size_t c = lo; c < hi; ++c)
                out.block(i).at(r, c) = sample_scalar(field, rng);
    }
    return out;
}

int run_vn_subadd(const VnArgs& args) {
    const BlockShape shape = parse_shape(args.shape);
    ordered_json rows = ordered_json::array();
    std::size_t inconsistent = 0;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        const std::uint64_t stream = SplitMix64::derive_state(args.seed,
                                                              trial);
        SplitMix64 rng(stream);
        const bool disjoint = trial % 2 == 1;
        BlockAlgebraElem a(shape), b(shape);
        if (disjoint) {
            std::vector<std::size_t> split;
            for (std::size_t i = 0; i < shape.blocks(); ++i)
                split.push_back(rng.below(shape.dim(i) + 1));
            a = sample_block_supported(shape, split, true, rng);
            b = sample_block_supported(shape, split, false, rng);
        } else {
            a = sample_block_general(shape, rng);
            b = sample_block_general(shape, rng);
        }
        SubadditivityRecord rec = subadditivity_check(a, b);
        const bool consistent = rec.equal == rec.condition_holds;
        if (!consistent)
            ++inconsistent;
        rows.push_back(ordered_json{{"trial", trial},
                                    {"seed", stream},
                                    {"kind", disjoint ? "disjoint" : "general"},
                                    {"rank_of_sum", rec.lhs.to_strings()},
                                    {"rank_sum", rec.rhs.to_strings()},
                                    {"equal", rec.equal},
                                    {"condition_holds", rec.condition_holds},
                                    {"consistent", consistent}});
    }
    ordered_json j{{"config", vn_config("subadd", args)},
                   {"records", rows},
                   {"all_consistent", inconsistent == 0}};
    emit_report(j, args.report);
    std::cerr << (inconsistent == 0
                      ? "equality matched the lattice condition on every "
                        "trial\n"
                      : "theorem violation recorded\n");
    return inconsistent == 0 ? 0 : 1;
}

int run_vn_cochran(const VnArgs& args) {
    const BlockShape shape = parse_shape(args.shape);
    ordered_json rows = ordered_json::array();
    std::size_t inconsistent = 0;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        const std::uint64_t stream = SplitMix64::derive_state(args.seed,
                                                              trial);
        SplitMix64 rng(stream);
        std::vector<BlockAlgebraElem> family =
            sample_orthogonal_idempotent_family(shape, 3, rng);
        BlockAlgebraElem target(shape);
        for (const BlockAlgebraElem& part : family)
            target = target + part;
        const bool perturbed = trial % 2 == 1;
        if (perturbed) {
            // Shift mass between two summands; the sum (and so the
            // target) is unchanged but the summands stop being
            // orthogonal idempotents.
            BlockAlgebraElem noise = sample_block_general(shape, rng);
            family[0] = family[0] + noise;
            family[1] = family[1] - noise;
        }
        CochranRecord rec = cochran_check(family, target);
        if (!rec.theorem_consistent)
            ++inconsistent;
        rows.push_back(ordered_json{
            {"trial", trial},
            {"seed", stream},
            {"kind", perturbed ? "perturbed" : "orthogonal"},
            {"rank_sum_matches", rec.rank_sum_matches},
            {"mutually_orthogonal_idempotents",
             rec.mutually_orthogonal_idempotents},
            {"consistent", rec.theorem_consistent}});
    }
    ordered_json j{{"config", vn_config("cochran", args)},
                   {"records", rows},
                   {"all_consistent", inconsistent == 0}};
    emit_report(j, args.report);
    std::cerr << (inconsistent == 0 ? "rank additivity matched mutual "
                                      "orthogonality on every trial\n"
                                    : "theorem violation recorded\n");
    return inconsistent == 0 ? 0 : 1;
}

int run_vn_idemsum(const VnArgs& args) {
    const BlockShape shape = parse_shape(args.shape);
    ordered_json rows = ordered_json::array();
    std::size_t inconsistent = 0;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        const std::uint64_t stream = SplitMix64::derive_state(args.seed,
                                                              trial);
        SplitMix64 rng(stream);
        std::vector<BlockAlgebraElem> family =
            sample_orthogonal_idempotent_family(shape, 3, rng);
        const bool perturbed = trial % 2 == 1;
        if (perturbed) {
            // Replace one member by the family's sum. The sum is still
            // idempotent, but it absorbs the other members instead of
            // annihilating them, so orthogonality breaks (except in the
            // degenerate draw where the other members are zero).
            BlockAlgebraElem sum(shape);
            for (const BlockAlgebraElem& part : family)
                sum = sum + part;
            family[1] = sum;
        }
        IdempotentSumRecord rec = idempotent_sum_check(family);
        if (!rec.theorem_consistent)
            ++inconsistent;
        rows.push_back(ordered_json{
            {"trial", trial},
            {"seed", stream},
            {"kind", perturbed ? "perturbed" : "orthogonal"},
            {"sum_idempotent", rec.sum_idempotent},
            {"mutually_orthogonal", rec.mutually_orthogonal},
            {"consistent", rec.theorem_consistent}});
    }
    ordered_json j{{"config", vn_config("idemsum", args)},
                   {"records", rows},
                   {"all_consistent", inconsistent == 0}};
    emit_report(j, args.report);
    std::cerr << (inconsistent == 0 ? "sum idempotency matched mutual "
                                      "orthogonality on every trial\n"
                                    : "theorem violation recorded\n");
    return inconsistent == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-identity toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand(
        "gen", "generate a rank identity by shuffling an exponent matrix");
    gen->add_option("--basis", gen_args.basis,
                    "semicolon-separated pairwise-coprime polynomials")
        ->required();
    gen->add_option("--lambda", gen_args.lambda,
                    "exponent rows, e.g. \"1,0,2;0,1,1\"")
        ->required();
    gen->add_option("--field", gen_args.field, "Q, Qi, or F<p> (default Q)");
    gen->add_option("--seed", gen_args.seed, "shuffle seed (default 0)");
    gen->add_option("--report", gen_args.report, "also write JSON here");

    CanonArgs canon_args;
    CLI::App* canon = app.add_subcommand(
        "canon", "canonical divisor chain of a polynomial tuple");
    canon->add_option("--polys", canon_args.polys,
                      "comma-separated polynomials")
        ->required();
    canon->add_option("--field", canon_args.field,
                      "Q, Qi, or F<p> (default Q)");
    canon->add_option("--report", canon_args.report, "also write JSON here");

    SnfArgs snf_args;
    CLI::App* snf = app.add_subcommand(
        "snf", "Smith normal form of a polynomial matrix");
    snf->add_option("--matrix", snf_args.matrix_path,
                    "JSON file: 2-D array of polynomial strings")
        ->required();
    snf->add_option("--field", snf_args.field, "Q, Qi, or F<p> (default Q)");
    snf->add_option("--report", snf_args.report, "also write JSON here");

    VerifyArgs verify_args;
    std::string verify_field;
    CLI::App* verify = app.add_subcommand(
        "verify", "verify a rank identity on random exact matrices");
    CLI::Option* opt_identity = verify->add_option(
        "--identity", verify_args.identity_path, "identity JSON file");
    CLI::Option* opt_builtin = verify->add_option(
        "--builtin", verify_args.builtin, "built-in identity name");
    opt_identity->excludes(opt_builtin);
    CLI::Option* opt_vfield = verify->add_option(
        "--field", verify_field,
        "field override (required meaning for --builtin, default Q)");
    verify->add_option("--trials", verify_args.trials,
                       "number of random matrices (default 100)");
    verify->add_option("--dims", verify_args.dims,
                       "comma-separated matrix sizes (default 2,3,4)");
    verify->add_option("--seed", verify_args.seed, "PRNG seed (default 0)");
    verify->add_option("--report", verify_args.report,
                       "also write JSON here");

    CertRunArgs cert_run_args;
    CertShowArgs cert_show_args;
    CLI::App* cert = app.add_subcommand(
        "cert", "symbolic block-matrix certificates");
    cert->require_subcommand(1);
    CLI::App* cert_run = cert->add_subcommand(
        "run", "check certificates symbolically");
    CLI::Option* opt_cname = cert_run->add_option(
        "name", cert_run_args.name, "certificate name");
    CLI::Option* opt_all =
        cert_run->add_flag("--all", cert_run_args.all, "run the full catalog");
    opt_cname->excludes(opt_all);
    cert_run->add_option("--field", cert_run_args.field,
                         "Q, Qi, or F<p> (default Q)");
    cert_run->add_option("--report", cert_run_args.report,
                         "also write JSON here");
    CLI::App* cert_show = cert->add_subcommand(
        "show", "print a certificate's matrices");
    cert_show->add_option("name", cert_show_args.name, "certificate name")
        ->required();
    cert_show->add_option("--field", cert_show_args.field,
                          "Q, Qi, or F<p> (default Q)");

    VnArgs vn_subadd_args, vn_cochran_args, vn_idemsum_args;
    CLI::App* vn = app.add_subcommand(
        "vn", "finite von Neumann model experiments over Q(i)");
    vn->require_subcommand(1);
    auto add_vn_options = [](CLI::App* cmd, VnArgs& args) {
        cmd->add_option("--shape", args.shape,
                        "block dimensions, e.g. 2,3 (default)");
        cmd->add_option("--trials", args.trials,
                        "number of trials (default 100)");
        cmd->add_option("--seed", args.seed, "PRNG seed (default 0)");
        cmd->add_option("--report", args.report, "also write JSON here");
    };
    CLI::App* vn_subadd = vn->add_subcommand(
        "subadd", "rank subadditivity equality vs lattice condition");
    add_vn_options(vn_subadd, vn_subadd_args);
    CLI::App* vn_cochran = vn->add_subcommand(
        "cochran", "rank additivity vs mutual orthogonality of summands");
    add_vn_options(vn_cochran, vn_cochran_args);
    CLI::App* vn_idemsum = vn->add_subcommand(
        "idemsum", "sum of idempotents idempotent vs mutual orthogonality");
    add_vn_options(vn_idemsum, vn_idemsum_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_args);
        if (canon->parsed())
            return run_canon(canon_args);
        if (snf->parsed())
            return run_snf(snf_args);
        if (verify->parsed()) {
            if (verify_args.builtin.empty() &&
                verify_args.identity_path.empty())
                throw Error("verify needs --identity or --builtin");
            if (*opt_vfield)
                verify_args.field = verify_field;
            return run_verify(verify_args);
        }
        if (cert_run->parsed()) {
            if (!cert_run_args.all && cert_run_args.name.empty())
                throw Error("cert run needs a certificate name or --all");
            return run_cert_run(cert_run_args);
        }
        if (cert_show->parsed())
            return run_cert_show(cert_show_args);
        if (vn_subadd->parsed())
            return run_vn_subadd(vn_subadd_args);
        if (vn_cochran->parsed())
            return run_vn_cochran(vn_cochran_args);
        if (vn_idemsum->parsed())
            return run_vn_idemsum(vn_idemsum_args);
    } catch (const Error& e) {
        std::cerr << "rankforge: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rankforge: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
