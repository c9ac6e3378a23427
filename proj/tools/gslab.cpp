// gslab: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gslab/abelian.hpp"
#include "gslab/chain_complex.hpp"
#include "gslab/error.hpp"
#include "gslab/fox.hpp"
#include "gslab/freesolv.hpp"
#include "gslab/lie.hpp"
#include "gslab/milnor.hpp"
#include "gslab/nilpotent.hpp"
#include "gslab/reports.hpp"
#include "gslab/verdicts.hpp"

using namespace gslab;

namespace {

enum Exit { ExitOk = 0, ExitUsage = 1, ExitHypothesis = 2, ExitFalsification = 3 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path), path); }

GroupHom load_hom(const std::string& a, const std::string& b, const std::string& f)
{
    const Presentation src = load_presentation(a);
    const Presentation tgt = load_presentation(b);
    return parse_hom(read_file(f), src, tgt, f);
}

std::string join(const std::vector<std::int64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void print_gr(const GrMapReport& gr)
{
    std::cout << "  k  l_src l_tgt rank verdict\n";
    for (const auto& d : gr.degrees)
        std::cout << "  " << d.k << "  " << d.l_src << "     " << d.l_tgt << "     " << d.lie_rank << "    "
                  << to_string(d.verdict) << "\n";
}

int finish(const Json& j, bool json, bool hypothesis_failed)
{
    if (json)
        std::cout << j.dump(2) << "\n";
    if (j.value("falsification", false)) {
        std::cerr << "FALSIFICATION: a theorem audit was violated\n";
        return ExitFalsification;
    }
    return hypothesis_failed ? ExitHypothesis : ExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gslab: lower central series, Alexander modules and Milnor invariants over Q"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON reports");
    app.fallthrough();

    std::string a, b, f, p_path, lnk, ccx, elems, gamma = "auto";
    int q = 4, n = 2, maxlen = 3, count = 1000, quotient = 200;
    std::uint64_t seed = 1;
    bool assume_h2 = false, group_h2 = false, csv = false;

    auto* abel = app.add_subcommand("abel", "Abelianization H1 of a presentation");
    abel->add_option("presentation", p_path)->required()->check(CLI::ExistingFile);

    auto* lcs = app.add_subcommand("lcs", "Rational lower central series dimensions");
    lcs->add_option("presentation", p_path)->required()->check(CLI::ExistingFile);
    lcs->add_option("--upto", q, "Truncation degree")->check(CLI::PositiveNumber);

    auto* stall = app.add_subcommand("stallings", "Rational Stallings verdict for a homomorphism");
    auto* dwyer = app.add_subcommand("dwyer", "Rational Dwyer verdict (graded model)");
    auto* meta = app.add_subcommand("meta-mono", "Level-one rank certificate");
    auto* twoc = app.add_subcommand("two-conn", "Two-connected torsion check over Z^b coefficients");
    for (auto* s : {stall, dwyer, meta, twoc}) {
        s->add_option("source", a)->required()->check(CLI::ExistingFile);
        s->add_option("target", b)->required()->check(CLI::ExistingFile);
        s->add_option("hom", f)->required()->check(CLI::ExistingFile);
    }
    stall->add_option("--upto", q, "Truncation degree")->check(CLI::PositiveNumber);
    stall->add_flag("--assume-h2-epi", assume_h2, "Assume H2(-;Q) epimorphism");
    dwyer->add_option("--n", n, "Dwyer level")->check(CLI::PositiveNumber);
    dwyer->add_flag("--group-h2", group_h2, "Report group H2 (needs aspherical flags)");
    twoc->add_option("--gamma", gamma, "Coefficients: 'auto' or rows like '1;0,1'");
    twoc->add_flag("--assume-h2", assume_h2, "Assume the H2 spanning hypothesis");

    auto* ddim = app.add_subcommand("dwyer-dim", "Dwyer quotient dimension (graded model)");
    ddim->add_option("presentation", p_path)->required()->check(CLI::ExistingFile);
    ddim->add_option("--n", n, "Level n >= 2")->check(CLI::Range(2, 64));

    auto* alex = app.add_subcommand("alex-rank", "Rank of the Alexander module");
    alex->add_option("presentation", p_path)->required()->check(CLI::ExistingFile);

    auto* mil = app.add_subcommand("milnor", "Milnor invariants from link data");
    mil->add_option("link", lnk)->required()->check(CLI::ExistingFile);
    mil->add_option("--maxlen", maxlen, "Longest multi-index")->check(CLI::Range(2, 12));
    mil->add_flag("--csv", csv, "Print the table as CSV");

    auto* audit = app.add_subcommand("ccx-audit", "Validate a .ccx complex and audit rank inequalities");
    audit->add_option("complex", ccx)->required()->check(CLI::ExistingFile);

    auto* fs = app.add_subcommand("freesolv", "Free solvable subgroup hypotheses");
    fs->add_option("presentation", p_path)->required()->check(CLI::ExistingFile);
    fs->add_option("--elems", elems, "File with one word per line")->required()->check(CLI::ExistingFile);
    fs->add_option("--n", n, "Derived length")->check(CLI::PositiveNumber);
    fs->add_flag("--assume-h2", assume_h2, "Assume the H2 surface hypothesis");

    auto* fuzz = app.add_subcommand("fuzz-strebel", "Seeded rank-inequality fuzz over random complexes");
    fuzz->add_option("--count", count, "Complexes for the rank and Euler audits")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--quotient", quotient, "Instances of the quotient bound")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--seed", seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ExitUsage;
    }

    try {
        if (*abel) {
            const Presentation p = load_presentation(p_path);
            const AbelianizationData ab = abelianization(p);
            if (!json)
                std::cout << "H1 = " << ab.describe() << "\n";
            return finish(abel_report(p, ab), json, false);
        }
        if (*lcs) {
            const NilpotentQuotientData nqd = truncated_quotient(load_presentation(p_path), q);
            if (!json)
                std::cout << "a = " << join(nqd.a) << "\nl = " << join(nqd.l) << "\n";
            return finish(lcs_report(nqd), json, false);
        }
        if (*stall) {
            const StallingsReport r = stallings_rational_verdict(load_hom(a, b, f), q, assume_h2);
            if (!json) {
                std::cout << "H1 iso: " << to_string(r.h1_iso.status) << "\nH2 epi: " << to_string(r.h2_epi.status)
                          << " (" << r.h2_epi.reason << ")\n";
                print_gr(r.gr);
                std::cout << "conclusion (gr iso through " << q << "): " << (r.conclusion_holds ? "holds" : "fails")
                          << "\n";
            }
            return finish(to_json(r), json, !r.hypotheses_hold || r.assumption_refuted);
        }
        if (*dwyer) {
            const DwyerReport r = dwyer_rational_verdict(load_hom(a, b, f), n, DwyerOptions{group_h2});
            if (!json) {
                print_gr(r.gr);
                std::cout << "Dwyer quotient dims (graded model): " << r.quotient_dim_src << " -> "
                          << r.quotient_dim_tgt << "\nside 1: " << (r.side1 ? "holds" : "fails")
                          << "\nside 2: " << (r.side2 ? "holds" : "fails") << "\nstatus: " << r.status << "\n";
            }
            return finish(to_json(r), json, !r.h1.isomorphism());
        }
        if (*ddim) {
            const Presentation p = load_presentation(p_path);
            const std::int64_t v = dwyer_quotient_dim(p, n);
            const std::int64_t x = dwyer_quotient_dim_crosscheck(p, n);
            if (!json)
                std::cout << "dwyer quotient dim (graded model, n=" << n << ") = " << v << "\n";
            return finish(dwyer_dim_report(p, n, v, x), json, false);
        }
        if (*alex) {
            const Presentation p = load_presentation(p_path);
            const AlexanderComplex c = alexander_complex(p);
            const int r = h1_rank(c);
            if (!json)
                std::cout << "d2 = " << format_matrix(c.d2) << "\nrank = " << r << "\n";
            return finish(alex_rank_report(p, c, r), json, false);
        }
        if (*meta) {
            const MonoCertificate c = metabelian_mono_certificate(load_hom(a, b, f));
            if (!json) {
                if (c.rank_preserved)
                    std::cout << "rank_preserved (" << c.source_rank << "=" << c.image_rank << ")\n";
                else
                    std::cout << "rank_dropped(" << c.source_rank << "," << c.image_rank << ")\n";
            }
            return finish(to_json(c), json, !c.rank_preserved);
        }
        if (*mil) {
            const MilnorTable t = mu_table(parse_link(read_file(lnk), lnk), maxlen);
            if (!json) {
                if (csv) {
                    std::cout << t.csv();
                } else {
                    for (const auto& idx : t.rows()) {
                        const MuBar& e = t.entries.at(idx);
                        std::cout << "mu(" << format_multi_index(idx) << ") = " << e.value.get_str();
                        if (e.delta != 0)
                            std::cout << " mod " << e.delta.get_str();
                        std::cout << "\n";
                    }
                }
            }
            return finish(to_json(t), json, false);
        }
        if (*audit) {
            const FreeComplex c = parse_ccx(read_file(ccx), ccx);
            const StrebelReport s = strebel_audit(c);
            const EulerReport e = euler_characteristic_report(c);
            if (!json) {
                for (const auto& l : s.lines)
                    std::cout << "p=" << l.p << ": rank " << l.lambda_rank << " <= " << l.q_dim
                              << (l.ok ? "" : "  VIOLATED") << "\n";
                std::cout << "euler: " << e.from_ranks << " " << e.from_lambda << " " << e.from_q << "\n";
            }
            return finish(ccx_report(c, s, e), json, false);
        }
        if (*twoc) {
            const GroupHom h = load_hom(a, b, f);
            const TwoConnectedReport r = two_connected_torsion_check(h, parse_gamma(gamma, h.target), assume_h2);
            if (!json)
                std::cout << "ker rank " << r.kernel_rank << ", coker rank " << r.cokernel_rank << "\nH2 hypothesis: "
                          << to_string(r.h2_span.status) << "\n";
            const bool hyp = !(r.h1_iso.holds() && r.h2_span.holds()) || r.assumption_refuted;
            return finish(to_json(r), json, hyp);
        }
        if (*fs) {
            const Presentation p = load_presentation(p_path);
            const FreeSolvableReport r = freesolvable_hypotheses(parse_subset(read_file(elems), p, elems), n, assume_h2);
            if (!json) {
                std::cout << (r.independent ? "independent" : "dependent") << " in H1(;Q) (rank " << r.h1_rank
                          << " of " << r.elements << ")\nH2 hypothesis: " << to_string(r.h2_hypothesis.status)
                          << "\n";
                if (r.probe)
                    std::cout << "metabelian probe: " << (r.probe->rank_preserved ? "rank_preserved" : "rank_dropped")
                              << "\n";
            }
            return finish(to_json(r), json, !r.hypotheses_hold);
        }
        if (*fuzz) {
            const FuzzSummary s = fuzz_strebel(count, seed, quotient);
            if (!json)
                std::cout << s.instances << " complexes: " << s.strebel_violations << " rank violations, "
                          << s.euler_violations << " Euler violations; " << s.quotient_instances
                          << " quotient bounds: " << s.quotient_violations << " violations\n";
            return finish(to_json(s), json, false);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::NotWellDefined ? ExitHypothesis : ExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return ExitUsage;
    }
    return ExitUsage;
}
