#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sacpat/catalog.hpp"
#include "sacpat/instances.hpp"
#include "sacpat/match.hpp"
#include "sacpat/model.hpp"
#include "sacpat/pattern.hpp"
#include "sacpat/propagate.hpp"
#include "sacpat/solve.hpp"
#include "sacpat/transform.hpp"
#include "sacpat/verify.hpp"

namespace
{
    sacpat::Instance load_instance(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw sacpat::ModelError("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return sacpat::parse_instance(buf.str());
    }

    void write_text(const std::string& path, const std::string& text)
    {
        if (path.empty() || path == "-")
        {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw sacpat::ModelError("cannot open " + path + " for writing");
        out << text;
    }

    sacpat::Pattern load_pattern(const std::string& name, const std::string& file)
    {
        if (!file.empty())
        {
            std::ifstream in(file);
            if (!in)
                throw sacpat::ModelError("cannot open " + file);
            std::ostringstream buf;
            buf << in.rdbuf();
            return sacpat::parse_pattern(buf.str());
        }
        return sacpat::get_pattern(name).pattern;
    }

    void print_certificate(const sacpat::Assignment& cert)
    {
        for (const auto& [var, value] : cert)
            std::cout << "x" << var << "=" << value << "\n";
    }
}

int main(int argc, char** argv)
{
    CLI::App app{"Binary CSP toolkit: pattern occurrence, singleton arc "
                 "consistency, and pattern-class solvers"};
    app.require_subcommand(1);

    bool strict_points = false;
    int jobs = 1;
    app.add_flag("--strict-points", strict_points,
                 "Distinct pattern points of one variable must map to distinct values");
    app.add_option("--jobs", jobs, "Threads for singleton-consistency probes (0 = all)");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Decide satisfiability");
    std::string solve_class = "auto";
    std::string solve_input;
    bool solve_construct = false;
    bool solve_repair = false;
    cmd_solve->add_option("--class", solve_class, "auto|q1|q2|r5|r8|r7m|t2|t3|t4|t5|oracle")
        ->default_val("auto");
    cmd_solve->add_flag("--construct", solve_construct, "Print a solution when satisfiable");
    cmd_solve->add_flag("--repair", solve_repair,
                        "r5 only: build the solution by constraint re-insertion");
    cmd_solve->add_option("input", solve_input, "Instance file")->required();

    // occurs
    auto* cmd_occurs = app.add_subcommand("occurs", "Test pattern occurrence");
    std::string occurs_pattern, occurs_file, occurs_input;
    std::string occurs_anchor;
    cmd_occurs->add_option("--pattern", occurs_pattern, "Catalog pattern name");
    cmd_occurs->add_option("--pattern-file", occurs_file, "Pattern file");
    cmd_occurs->add_option("--at", occurs_anchor,
                           "Anchor <pvar>.<point>=<var>.<value>: the given pattern point "
                           "must map to the given value");
    cmd_occurs->add_option("input", occurs_input, "Instance file")->required();

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "Report pattern occurrences "
                                                        "and applicable solvers");
    std::string classify_input;
    cmd_classify->add_option("input", classify_input, "Instance file")->required();

    // preprocess
    auto* cmd_pre = app.add_subcommand("preprocess",
                                       "Apply rewrites in the order given on the "
                                       "command line");
    std::string pre_input, pre_output, pre_log;
    bool pre_ns = false, pre_btp = false, pre_sac = false, pre_ac = false, pre_trace = false;
    cmd_pre->add_flag("--ns", pre_ns, "Remove neighbourhood-substitutable values");
    cmd_pre->add_flag("--btp", pre_btp, "Merge value pairs without broken triangles");
    cmd_pre->add_flag("--sac", pre_sac, "Singleton arc consistency closure");
    cmd_pre->add_flag("--ac", pre_ac, "Arc consistency closure");
    cmd_pre->add_flag("--trace", pre_trace, "Dump the propagation trace of --ac to stderr");
    cmd_pre->add_option("--log", pre_log, "Write the rewrite log to this file");
    cmd_pre->add_option("-o,--output", pre_output, "Output file (default stdout)");
    cmd_pre->add_option("input", pre_input, "Instance file")->required();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "Generate an instance");
    std::string gen_kind, gen_output;
    int gen_n = 5, gen_q = 3, gen_pad_x = 0, gen_pad_y = 1, gen_pad_k = 1;
    double gen_density = 0.5, gen_tightness = 0.5;
    std::uint64_t gen_seed = 0;
    std::string gen_avoid, gen_base;
    bool gen_bicond = false;
    cmd_gen->add_option("kind", gen_kind, "kcol|i34|i5|gadget|random|pad")->required();
    cmd_gen->add_option("-n,--vars", gen_n, "Variable count (kcol, random)");
    cmd_gen->add_option("-q,--domain", gen_q, "Domain size (kcol, random)");
    cmd_gen->add_option("--density", gen_density, "Constraint probability (random)");
    cmd_gen->add_option("--tightness", gen_tightness, "Forbidden-pair probability (random)");
    cmd_gen->add_option("--seed", gen_seed, "Generator seed (random)");
    cmd_gen->add_option("--avoid", gen_avoid, "Resample until this pattern is absent (random)");
    cmd_gen->add_flag("--biconditional", gen_bicond, "Two-way chain heads (gadget)");
    cmd_gen->add_option("--base", gen_base, "Instance whose constraint is padded (pad)");
    cmd_gen->add_option("-x", gen_pad_x, "First endpoint (pad)");
    cmd_gen->add_option("-y", gen_pad_y, "Second endpoint (pad)");
    cmd_gen->add_option("-k", gen_pad_k, "Chain length (pad)");
    cmd_gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

    // verify-paper
    auto* cmd_verify = app.add_subcommand(
        "verify-paper", "Check the built-in reference facts about the catalog "
                        "and the hard instances");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (cmd_solve->parsed())
        {
            sacpat::Instance I = load_instance(solve_input);
            sacpat::SolveReport report;
            if (solve_class == "auto")
                report = sacpat::auto_solve(I);
            else if (solve_class == "oracle")
                report = sacpat::oracle_solve(I);
            else if (solve_class == "q1")
                report = sacpat::solve_q1(I);
            else if (solve_class == "q2")
                report = sacpat::solve_q2(I);
            else if (solve_class == "r5")
                report = sacpat::solve_r5(I, solve_repair);
            else if (solve_class == "r8")
                report = sacpat::solve_r8(I);
            else if (solve_class == "r7m")
                report = sacpat::solve_r7m(I);
            else if (solve_class == "t3")
                report = sacpat::solve_t3(I);
            else if (solve_class == "t2" || solve_class == "t4" || solve_class == "t5")
            {
                std::string name = "T";
                name += solve_class[1];
                report = sacpat::solve_by_sac(I, name);
            }
            else
                throw sacpat::ModelError("unknown solver class: " + solve_class);
            std::cout << (report.sat ? "sat" : "unsat") << "\n";
            std::cerr << "method: " << report.method << "\n";
            if (report.sat && solve_construct)
            {
                if (!report.certificate)
                    throw sacpat::ModelError("solver produced no certificate");
                print_certificate(*report.certificate);
            }
            return report.sat ? 0 : 1;
        }

        if (cmd_occurs->parsed())
        {
            if (occurs_pattern.empty() == occurs_file.empty())
                throw sacpat::ModelError("give exactly one of --pattern and --pattern-file");
            sacpat::Pattern P = load_pattern(occurs_pattern, occurs_file);
            sacpat::Instance I = load_instance(occurs_input);
            std::optional<sacpat::OccurrenceWitness> w;
            if (!occurs_anchor.empty())
            {
                int pv, pp, x, v;
                char d1, d2, d3;
                std::istringstream in(occurs_anchor);
                if (!(in >> pv >> d1 >> pp >> d2 >> x >> d3 >> v) || d1 != '.' ||
                    d2 != '=' || d3 != '.')
                    throw sacpat::ModelError("--at expects <pvar>.<point>=<var>.<value>");
                w = sacpat::occurs_at(P, {pv, pp}, I, x, v, strict_points);
            }
            else
                w = sacpat::occurs(P, I, strict_points);
            if (w)
            {
                std::cout << "yes\n";
                for (std::size_t pv = 0; pv < w->var_map.size(); ++pv)
                {
                    std::cout << "  " << pv << " -> " << w->var_map[pv] << " :";
                    for (std::size_t pp = 0; pp < w->point_map[pv].size(); ++pp)
                        std::cout << " " << pv << "." << pp << "="
                                  << w->point_map[pv][pp];
                    std::cout << "\n";
                }
                return 0;
            }
            std::cout << "no\n";
            return 1;
        }

        if (cmd_classify->parsed())
        {
            sacpat::Instance I = load_instance(classify_input);
            sacpat::ClassifyReport report = sacpat::classify(I);
            for (const auto& [name, present] : report.occurrence)
                std::cout << name << ": " << (present ? "present" : "absent") << "\n";
            std::cout << "applicable:";
            for (const std::string& s : report.applicable)
                std::cout << " " << s;
            std::cout << "\n";
            return 0;
        }

        if (cmd_pre->parsed())
        {
            sacpat::Instance I = load_instance(pre_input);
            // Apply the requested rewrites in command-line order.
            std::vector<std::string> order;
            for (int i = 1; i < argc; ++i)
            {
                std::string a = argv[i];
                if (a == "--ns" || a == "--btp" || a == "--sac" || a == "--ac")
                    order.push_back(a.substr(2));
            }
            sacpat::TransformLog full_log;
            for (const std::string& step : order)
            {
                if (step == "ns")
                {
                    auto [J, log] = sacpat::ns_eliminate(I);
                    I = std::move(J);
                    for (const auto& r : log.records)
                        full_log.records.push_back(r);
                }
                else if (step == "btp")
                {
                    auto [J, log] = sacpat::btp_merge_fixpoint(I);
                    I = std::move(J);
                    for (const auto& r : log.records)
                        full_log.records.push_back(r);
                }
                else if (step == "sac")
                {
                    I = jobs == 1 ? sacpat::enforce_sac(I)
                                  : sacpat::enforce_sac_parallel(I, jobs);
                }
                else
                {
                    auto [J, trace] = sacpat::enforce_ac(I);
                    I = std::move(J);
                    if (pre_trace)
                        std::cerr << sacpat::format_trace(trace);
                }
            }
            if (!pre_log.empty())
            {
                std::ostringstream log_text;
                for (const auto& r : full_log.records)
                {
                    switch (r.kind)
                    {
                    case sacpat::TransformRecord::Kind::ns_removed:
                        log_text << "ns " << r.var << " " << r.a << " " << r.b << "\n";
                        break;
                    case sacpat::TransformRecord::Kind::merged:
                        log_text << "merge " << r.var << " " << r.a << " " << r.b
                                 << " " << r.c << "\n";
                        break;
                    case sacpat::TransformRecord::Kind::constraint_deleted:
                        log_text << "delete " << r.var << " " << r.var2 << "\n";
                        break;
                    }
                }
                write_text(pre_log, log_text.str());
            }
            write_text(pre_output, sacpat::serialize_instance(I));
            return 0;
        }

        if (cmd_gen->parsed())
        {
            sacpat::Instance I;
            if (gen_kind == "kcol")
                I = sacpat::gen_kcoloring(gen_n, gen_q);
            else if (gen_kind == "i34")
                I = sacpat::gen_i34();
            else if (gen_kind == "i5")
                I = sacpat::gen_i5();
            else if (gen_kind == "gadget")
                I = sacpat::gen_implication_gadget(gen_bicond);
            else if (gen_kind == "random")
            {
                sacpat::GenParams params;
                params.n_vars = gen_n;
                params.domain_size = gen_q;
                params.constraint_density = gen_density;
                params.tightness = gen_tightness;
                params.seed = gen_seed;
                if (gen_avoid.empty())
                    I = sacpat::gen_random(params);
                else
                {
                    auto J = sacpat::gen_pattern_free(
                        sacpat::get_pattern(gen_avoid).pattern, params, 10000);
                    if (!J)
                        throw sacpat::ModelError("no " + gen_avoid +
                                                 "-free instance found");
                    I = *J;
                }
            }
            else if (gen_kind == "pad")
            {
                if (gen_base.empty())
                    throw sacpat::ModelError("pad requires --base");
                I = sacpat::gen_pad_equality(load_instance(gen_base), gen_pad_x,
                                             gen_pad_y, gen_pad_k);
            }
            else
                throw sacpat::ModelError("unknown generator: " + gen_kind);
            write_text(gen_output, sacpat::serialize_instance(I));
            return 0;
        }

        if (cmd_verify->parsed())
            return sacpat::verify_reference_facts(std::cout) ? 0 : 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
