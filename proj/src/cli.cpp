#include "lozenge/cli.hpp"

#include "lozenge/count.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/render.hpp"
#include "lozenge/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace lozenge {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RegionArgs {
    std::string family = "R";
    std::string l, q, input;
    int x = 0;
    bool x_given = false;
    int a = 1, b = 1, k = 0;
    std::vector<std::string> windows;
};

void add_region_flags(CLI::App* c, RegionArgs& r)
{
    c->add_option("--family", r.family, "R, Rbar or H")->check(CLI::IsMember({"R", "Rbar", "H"}));
    c->add_option("--l", r.l, "list l, e.g. 2,4,5 (- for empty)");
    c->add_option("--q", r.q, "list q, e.g. 2,4 (- for empty)");
    c->add_option("--x", r.x, "the parameter x")->each([&r](const std::string&) { r.x_given = true; });
    c->add_option("--a", r.a, "hexagon parameter a")->check(CLI::PositiveNumber);
    c->add_option("--b", r.b, "hexagon parameter b")->check(CLI::PositiveNumber);
    c->add_option("--k", r.k, "hexagon parameter k")->check(CLI::NonNegativeNumber);
    c->add_option("--window", r.windows, "window D:size@row or N:size@row (repeatable)");
    c->add_option("--input", r.input, "read the region from a TRIREGION file");
}

IndexList list_arg(const std::string& name, const std::string& text)
{
    try {
        return IndexList::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + " '" + text + "': " + e.what());
    }
}

RFamily r_family(const RegionArgs& r)
{
    if (r.family == "R")
        return RFamily::R;
    if (r.family == "Rbar")
        return RFamily::RBar;
    throw UsageError("family " + r.family + " is not R or Rbar");
}

std::vector<WindowSpec> window_args(const RegionArgs& r)
{
    std::vector<WindowSpec> ws;
    for (const auto& w : r.windows) {
        try {
            ws.push_back(WindowSpec::parse(w));
        } catch (const std::invalid_argument& e) {
            throw UsageError("--window '" + w + "': " + e.what());
        }
    }
    return ws;
}

int checked_x(const RegionArgs& r, RFamily f, const IndexList& l, const IndexList& q)
{
    if (!r.x_given)
        throw UsageError("--x is required for family " + r.family);
    const int lo = r_min_x(l, q, f);
    if (r.x < lo && !(l.empty() && q.empty()))
        throw UsageError("--x " + std::to_string(r.x) + " is below the minimum " + std::to_string(lo));
    return r.x;
}

Region read_region_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return read_triregion(in);
}

// The region named by the flags. For hexagons with windows the placement
// must be valid; the bare hexagon is always allowed.
Region build_region(const RegionArgs& r)
{
    if (!r.input.empty())
        return read_region_file(r.input);
    if (r.family == "H") {
        HexParams p{r.a, r.b, r.k};
        auto ws = window_args(r);
        if (ws.empty())
            return hexagon(p);
        try {
            return windowed_hexagon(p, ws).with_windows;
        } catch (const RegionError& e) {
            throw UsageError(e.what());
        }
    }
    const RFamily f = r_family(r);
    const IndexList l = list_arg("l", r.l), q = list_arg("q", r.q);
    return r_family_region(l, q, checked_x(r, f, l, q), f);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

PathSide side_arg(const std::string& s)
{
    if (s == "sw" || s == "southwest")
        return PathSide::Southwest;
    if (s == "nw" || s == "northwest")
        return PathSide::Northwest;
    throw UsageError("--side must be sw or nw");
}

struct SweepArgs {
    int max_entry = 4, max_len = 2, xspan = 3;
    int max_ab = 4, max_k = 3, max_windows = 2;
    int samples = 20;
    unsigned seed = 1;
};

std::vector<CountReport> run_verify(const std::string& target, const SweepArgs& s)
{
    std::vector<CountReport> out;
    auto append = [&out](std::vector<CountReport> v) {
        for (auto& r : v)
            out.push_back(std::move(r));
    };
    const bool all = target == "all";
    const auto lists = all_lists(s.max_entry, s.max_len);
    const auto sweep = r_sweep(s.max_entry, s.max_len, s.xspan);

    if (all || target == "prop21") {
        append(parallel_reports(sweep.size(), [&](std::size_t i) {
            const auto& t = sweep[i];
            return std::vector<CountReport>{verify_prop_2_1(t.l, t.q, t.x, t.family)};
        }));
    }
    if (all || target == "recurrences") {
        std::set<std::tuple<std::vector<int>, std::vector<int>, int>> seen;
        std::vector<RInstance> todo;
        for (const auto& t : sweep)
            if (seen.insert({t.l.entries(), t.q.entries(), t.x}).second)
                todo.push_back(t);
        append(parallel_reports(todo.size(), [&](std::size_t i) {
            try {
                return verify_count_recurrences(todo[i].l, todo[i].q, todo[i].x);
            } catch (const DomainError&) {
                return std::vector<CountReport>{};
            }
        }));
        out.push_back(verify_reachability(sweep));
    }
    if (all || target == "boundary") {
        for (const auto& l : lists)
            for (const auto& q : lists)
                if (!(l.empty() && q.empty()))
                    append(verify_boundary_lemmas(l, q));
    }
    if (all || target == "poly") {
        for (const auto& l : lists)
            for (const auto& q : lists)
                append(verify_poly_recurrences(l, q));
    }
    if (all || target == "increments") {
        std::mt19937 rng(s.seed);
        int done = 0;
        while (done < s.samples) {
            const IndexList& l = lists[rng() % lists.size()];
            const IndexList& q = lists[rng() % lists.size()];
            const bool on_l = rng() % 2 == 0;
            const IndexList& which = on_l ? l : q;
            if (which.empty())
                continue;
            const int k = 1 + static_cast<int>(rng() % which.size());
            if (k < which.size() && which.at(k) + 1 == which.at(k + 1))
                continue;
            const int x = static_cast<int>(rng() % 7);
            append(verify_increment_relations(l, q, on_l ? ListSel::L : ListSel::Q, k, x));
            ++done;
        }
    }
    if (all || target == "theorem11" || target == "factorization") {
        const auto cases = theorem_sweep(s.max_ab, s.max_k, s.max_windows);
        const bool thm = all || target == "theorem11";
        const bool fac = all || target == "factorization";
        append(parallel_reports(cases.size(), [&](std::size_t i) {
            std::vector<CountReport> v;
            if (thm)
                v.push_back(verify_theorem_1_1(cases[i].first, cases[i].second));
            if (fac)
                v.push_back(verify_factorization(
                    windowed_hexagon(cases[i].first, cases[i].second).with_windows));
            return v;
        }));
    }
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lozenge tilings of hexagons with axis windows and the R regions"};
    app.name("lozenge");
    app.require_subcommand(1);

    RegionArgs count_args;
    std::string method = "oracle", side = "sw";
    auto* count = app.add_subcommand("count", "tiling generating function of a region");
    add_region_flags(count, count_args);
    count->add_option("--method", method, "oracle, gv, formula or all")
        ->check(CLI::IsMember({"oracle", "gv", "formula", "all"}));
    count->add_option("--side", side, "path side for gv: sw or nw");

    RegionArgs formula_args;
    std::string formula_x;
    auto* formula = app.add_subcommand("formula", "evaluate P or Pbar, or the hexagon product");
    formula->add_option("--family", formula_args.family, "R, Rbar or H")
        ->check(CLI::IsMember({"R", "Rbar", "H"}));
    formula->add_option("--l", formula_args.l, "list l");
    formula->add_option("--q", formula_args.q, "list q");
    formula->add_option("--x", formula_x, "rational argument, e.g. 3 or 5/2");
    formula->add_option("--a", formula_args.a)->check(CLI::PositiveNumber);
    formula->add_option("--b", formula_args.b)->check(CLI::PositiveNumber);
    formula->add_option("--k", formula_args.k)->check(CLI::NonNegativeNumber);
    formula->add_option("--window", formula_args.windows, "window D:size@row or N:size@row");

    std::vector<long> box;
    auto* mac = app.add_subcommand("macmahon", "plane partitions in an a x b x c box");
    mac->add_option("sides", box, "a b c")->expected(3)->required()->check(CLI::NonNegativeNumber);

    std::string target;
    SweepArgs sweep;
    auto* verify = app.add_subcommand("verify", "exact checks of the identities");
    verify->add_option("target", target)
        ->required()
        ->check(CLI::IsMember({"theorem11", "prop21", "recurrences", "boundary", "poly",
                               "increments", "factorization", "all"}));
    verify->add_option("--max-entry", sweep.max_entry, "largest list entry")->check(CLI::PositiveNumber);
    verify->add_option("--max-len", sweep.max_len, "longest list")->check(CLI::NonNegativeNumber);
    verify->add_option("--xspan", sweep.xspan, "x above its minimum")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-ab", sweep.max_ab, "largest a and b")->check(CLI::PositiveNumber);
    verify->add_option("--max-k", sweep.max_k, "largest k")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-windows", sweep.max_windows, "most windows")->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", sweep.samples, "random increment instances")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", sweep.seed, "random seed");

    RegionArgs render_args;
    std::string format = "ascii", output;
    bool with_tiling = false;
    auto* rend = app.add_subcommand("render", "draw a region");
    add_region_flags(rend, render_args);
    rend->add_option("--format", format, "ascii, svg or triregion")
        ->check(CLI::IsMember({"ascii", "svg", "triregion"}));
    rend->add_option("--output", output, "output file (default stdout)");
    rend->add_flag("--tiling", with_tiling, "outline one tiling (svg)");

    RegionArgs cut_args;
    std::string cut_output;
    auto* cut = app.add_subcommand("cut", "split a symmetric region along its axis");
    add_region_flags(cut, cut_args);
    cut->add_option("--output", cut_output, "write PREFIX.plus.tri and PREFIX.minus.tri");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*count) {
            if (method == "oracle" || count_args.family == "H" || !count_args.input.empty()) {
                if (method == "gv")
                    throw UsageError("--method gv needs family R or Rbar");
                Region r = build_region(count_args);
                if (method == "formula" || method == "all") {
                    if (count_args.family != "H" || count_args.windows.empty())
                        throw UsageError("the hexagon formula needs windows");
                    auto h = windowed_hexagon({count_args.a, count_args.b, count_args.k},
                                              window_args(count_args));
                    ExactRational f = theorem_rhs(h) * pow2(h.exponent());
                    if (method == "formula") {
                        out << to_string(f) << "\n";
                        return 0;
                    }
                    std::string name = h.str();
                    std::erase(name, ' ');
                    auto rep = make_report("theorem[" + name + "]", {{"oracle", count_oracle(r)}, {"formula", f}});
                    std::string line = rep.line();
                    out << line << "\n";
                    return rep.match ? 0 : 1;
                }
                out << to_string(count_oracle(r)) << "\n";
                return 0;
            }
            const RFamily f = r_family(count_args);
            const IndexList l = list_arg("l", count_args.l), q = list_arg("q", count_args.q);
            const int x = checked_x(count_args, f, l, q);
            if (method == "gv") {
                out << to_string(count_gv(l, q, x, f, side_arg(side))) << "\n";
                return 0;
            }
            if (method == "formula") {
                out << to_string(p_family(l, q, x, f)) << "\n";
                return 0;
            }
            auto rep = verify_prop_2_1(l, q, x, f);
            out << rep.line() << "\n";
            return rep.match ? 0 : 1;
        }
        if (*formula) {
            if (formula_args.family == "H") {
                auto h = windowed_hexagon({formula_args.a, formula_args.b, formula_args.k},
                                          window_args(formula_args));
                out << to_string(theorem_rhs(h)) << "\n";
                return 0;
            }
            if (formula_x.empty())
                throw UsageError("--x is required");
            ExactRational x;
            try {
                x = parse_rational(formula_x);
            } catch (const std::exception& e) {
                throw UsageError("--x '" + formula_x + "': " + e.what());
            }
            const IndexList l = list_arg("l", formula_args.l), q = list_arg("q", formula_args.q);
            out << to_string(p_family(l, q, x, r_family(formula_args))) << "\n";
            return 0;
        }
        if (*mac) {
            out << macmahon(box[0], box[1], box[2]).get_str() << "\n";
            return 0;
        }
        if (*verify) {
            auto reports = run_verify(target, sweep);
            long bad = 0;
            for (const auto& r : reports) {
                out << r.line() << "\n";
                bad += r.match ? 0 : 1;
            }
            out << "SUMMARY checks=" << reports.size() << " mismatches=" << bad << "\n";
            return bad ? 1 : 0;
        }
        if (*rend) {
            Region r = build_region(render_args);
            std::optional<std::vector<LozengePos>> tiling;
            if (with_tiling) {
                tiling = first_tiling(r);
                if (!tiling)
                    throw UsageError("the region has no tiling to draw");
            }
            write_output(output, render(r, parse_render_format(format), tiling), out);
            return 0;
        }
        if (*cut) {
            Region r = build_region(cut_args);
            CutResult c = symmetry_axis_cut(r);
            out << "width " << c.width << "\n";
            out << "plus cells=" << c.plus.size() << " count=" << to_string(count_oracle(c.plus))
                << "\n";
            out << "minus cells=" << c.minus.size() << " count=" << to_string(count_oracle(c.minus))
                << "\n";
            if (!cut_output.empty()) {
                write_output(cut_output + ".plus.tri", write_triregion(c.plus), out);
                write_output(cut_output + ".minus.tri", write_triregion(c.minus), out);
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace lozenge
