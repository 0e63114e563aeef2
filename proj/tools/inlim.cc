#include <inlim/errors.hh>
#include <inlim/generate.hh>
#include <inlim/io.hh>
#include <inlim/oracle.hh>
#include <inlim/solver.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace inlim;

using std::cerr;
using std::cout;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_empty = 0;
    constexpr int exit_nonempty = 1;
    constexpr int exit_error = 2;

    using Clock = std::chrono::steady_clock;

    auto elapsed_ms(Clock::time_point since) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
    }

    auto format_ms(double ms) -> string
    {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << ms;
        return s.str();
    }

    template <typename T_>
    auto join(const vector<T_> & items, char sep = ',') -> string
    {
        std::ostringstream s;
        for (size_t i = 0; i < items.size(); ++i)
            s << (i ? string(1, sep) : string()) << items[i];
        return s.str();
    }

    auto parse_list(const string & text) -> vector<VertexId>
    {
        vector<VertexId> result;
        std::istringstream in(text);
        string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            try {
                size_t used = 0;
                auto value = std::stoul(item, &used);
                if (used != item.size())
                    throw std::invalid_argument(item);
                result.push_back(static_cast<VertexId>(value));
            }
            catch (const std::logic_error &) {
                throw InvalidInput("not a vertex list: '" + text + "'");
            }
        }
        return result;
    }

    auto parse_sizes(const string & text) -> vector<size_t>
    {
        vector<size_t> result;
        for (auto v : parse_list(text))
            result.push_back(v);
        return result;
    }

    struct SolveFlags
    {
        string fvs;
        bool fvs_given = false;
        size_t fvs_max = 8;
        bool witness = false;
        bool deterministic = false;
        unsigned jobs = 1;
    };

    auto add_solve_flags(CLI::App * app, SolveFlags & flags) -> void
    {
        app->add_option("--fvs", flags.fvs, "Feedback vertex set to use, comma separated (may be empty)");
        app->add_option("--fvs-max", flags.fvs_max, "Largest feedback vertex set to search for")->capture_default_str();
        app->add_option("--jobs", flags.jobs, "Threads for section tests")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_flag("--deterministic", flags.deterministic, "Sequential search and no timings, for byte-identical output");
    }

    auto options_from(const SolveFlags & flags, size_t vertex_count) -> SolveOptions
    {
        SolveOptions options;
        if (flags.fvs_given) {
            auto members = parse_list(flags.fvs);
            options.fvs = VertexSet(vertex_count, members);
        }
        options.k_max = flags.fvs_max;
        options.want_witness = flags.witness;
        options.jobs = flags.deterministic ? 1 : flags.jobs;
        return options;
    }

    auto print_witness(const CoDecomposition & d, const Witness & w) -> void
    {
        vector<string> vs, es;
        for (VertexId t = 0; t < w.vertex_elements.size(); ++t)
            vs.push_back(d.vertex_sets[t].name(w.vertex_elements[t]));
        for (EdgeId e = 0; e < w.edge_elements.size(); ++e)
            es.push_back(d.edge_sets[e].name(w.edge_elements[e]));
        cout << "witness=" << join(vs) << "\n";
        cout << "witness_edges=" << join(es) << "\n";
    }

    auto verdict_line(const Verdict & v) -> int
    {
        cout << (v.empty_limit ? "EMPTY" : "NONEMPTY") << "\n";
        return v.empty_limit ? exit_empty : exit_nonempty;
    }

    auto run_solve(const string & file, const SolveFlags & flags) -> int
    {
        auto d = io::parse_diagram(io::read_file(file));
        auto options = options_from(flags, d.shape.vertex_count());
        auto start = Clock::now();
        auto report = inlim::inlim(d, options);
        auto ms = elapsed_ms(start);

        cout << "n=" << d.shape.vertex_count() << "\n";
        cout << "edges=" << d.shape.edge_count() << "\n";
        cout << "w=" << d.width() << "\n";
        cout << "k=" << report.fvs.size() << "\n";
        cout << "fvs=" << join(report.fvs.members()) << "\n";
        cout << "section_tests=" << report.section_tests << "\n";
        cout << "pruned_tests=" << report.pruned_tests << "\n";
        cout << "jobs=" << options.jobs << "\n";
        if (! flags.deterministic)
            cout << "time_ms=" << format_ms(ms) << "\n";
        if (report.witness)
            print_witness(d, *report.witness);
        return verdict_line(report.verdict);
    }

    auto run_oracle(const string & file, std::uint64_t cap) -> int
    {
        auto d = io::parse_diagram(io::read_file(file));
        require_valid(d);
        auto start = Clock::now();
        auto families = oracle::enumerate_limit(d, cap);
        auto ms = elapsed_ms(start);
        cout << "n=" << d.shape.vertex_count() << "\n";
        cout << "w=" << d.width() << "\n";
        cout << "search_space=" << oracle::search_space(d) << "\n";
        cout << "families=" << families.size() << "\n";
        cout << "time_ms=" << format_ms(ms) << "\n";
        return verdict_line(Verdict{families.empty()});
    }

    auto run_image(const string & file) -> int
    {
        auto d = io::parse_diagram(io::read_file(file));
        require_valid(d);
        auto mask = image_tree(d, SubMask::full(d));
        cout << io::diagram_to_json(as_subdiagram(d, mask).diagram) << "\n";
        return 0;
    }

    auto parse_template(const string & spec) -> SimpleGraph
    {
        if (spec.rfind("file:", 0) == 0)
            return io::parse_graph(io::read_file(spec.substr(5)));
        if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'K')
            && std::all_of(spec.begin() + 1, spec.end(), [](unsigned char c) { return std::isdigit(c); }))
            return complete_graph(std::stoul(spec.substr(1)));
        throw InvalidInput("unknown template '" + spec + "', expected k<n> or file:<graph.json>");
    }

    auto run_hom(const string & file, const string & template_spec, const SolveFlags & flags) -> int
    {
        auto b = io::parse_decomposition(io::read_file(file));
        auto h = parse_template(template_spec);
        auto options = options_from(flags, b.shape.vertex_count());
        auto start = Clock::now();
        auto report = hom_exists(b, h, options);
        auto ms = elapsed_ms(start);

        size_t max_bag = 0;
        for (auto & bag : b.bags)
            max_bag = std::max(max_bag, bag.size());
        cout << "x_vertices=" << b.target.vertex_count() << "\n";
        cout << "x_edges=" << b.target.edge_count() << "\n";
        cout << "h_vertices=" << h.vertex_count() << "\n";
        cout << "bags=" << b.bags.size() << "\n";
        cout << "max_bag=" << max_bag << "\n";
        cout << "largest_hom_set=" << report.largest_bag_hom_set << "\n";
        cout << "k=" << report.solve.fvs.size() << "\n";
        cout << "section_tests=" << report.solve.section_tests << "\n";
        if (! flags.deterministic)
            cout << "time_ms=" << format_ms(ms) << "\n";
        if (report.map)
            cout << "map=" << join(*report.map) << "\n";
        cout << (report.exists ? "HOM" : "NO-HOM") << "\n";
        return report.exists ? exit_nonempty : exit_empty;
    }

    auto run_cset(const string & category_file, const string & file, const SolveFlags & flags) -> int
    {
        auto c = io::parse_category(io::read_file(category_file));
        auto d = io::parse_cset_diagram(io::read_file(file), c);
        auto options = options_from(flags, d.shape.vertex_count());
        auto start = Clock::now();
        auto report = cset_inlim(d, options);
        auto ms = elapsed_ms(start);

        cout << "n=" << d.shape.vertex_count() << "\n";
        cout << "objects=" << c.object_count << "\n";
        cout << "morphisms=" << c.size() << "\n";
        cout << "w_total=" << d.width() << "\n";
        cout << "w_slice=" << d.slice_width() << "\n";
        for (ObjectId o = 0; o < report.slices.size(); ++o) {
            auto & s = report.slices[o];
            cout << "slice." << o << "=" << (s.verdict.empty_limit ? "EMPTY" : "NONEMPTY")
                 << " section_tests=" << s.section_tests << "\n";
        }
        if (! flags.deterministic)
            cout << "time_ms=" << format_ms(ms) << "\n";
        return verdict_line(report.verdict);
    }

    auto run_fvs(const string & file, size_t k_max) -> int
    {
        auto j = nlohmann::json::parse(io::read_file(file), nullptr, false);
        if (j.is_discarded())
            throw InvalidInput("malformed JSON in '" + file + "'");
        auto g = j.contains("shape") ? io::parse_graph(j["shape"].dump()) : io::parse_graph(j.dump());
        auto s = fvs_minimum(g, k_max);
        cout << "n=" << g.vertex_count() << "\n";
        cout << "edges=" << g.edge_count() << "\n";
        cout << "k_max=" << k_max << "\n";
        if (! s) {
            cout << "fvs=NONE\n";
            return 1;
        }
        cout << "k=" << s->size() << "\n";
        cout << "fvs=" << join(s->members()) << "\n";
        return 0;
    }

    struct GenFlags
    {
        string kind = "tree";
        size_t n = 10;
        size_t w = 3;
        std::uint64_t seed = 1;
        double p = 0.3;
        bool exact = false;
        bool planted = false;
        size_t min_size = 1;
    };

    auto run_gen(const GenFlags & flags) -> int
    {
        generate::InstanceSpec spec;
        spec.kind = generate::parse_shape_kind(flags.kind);
        spec.n = flags.n;
        spec.w = flags.w;
        spec.edge_probability = flags.p;
        spec.exact_sizes = flags.exact;
        spec.planted = flags.planted;
        spec.min_size = flags.min_size;
        auto d = generate::random_diagram(spec, flags.seed);

        auto j = nlohmann::ordered_json::parse(io::diagram_to_json(d));
        j["generator"] = {{"kind", flags.kind}, {"n", flags.n}, {"w", flags.w}, {"seed", flags.seed},
            {"edge_probability", flags.p}, {"exact_sizes", flags.exact}, {"planted", flags.planted}};
        cout << j.dump(2) << "\n";
        return 0;
    }

    struct BenchFlags
    {
        string mode = "path";
        string sizes = "100,1000,10000";
        size_t w = 5;
        size_t repeats = 5;
        std::uint64_t seed = 1;
        std::uint64_t cap = oracle::default_cap;
        unsigned jobs = 1;
    };

    auto median(vector<double> xs) -> double
    {
        std::sort(xs.begin(), xs.end());
        auto m = xs.size() / 2;
        return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
    }

    auto run_bench(const BenchFlags & flags) -> int
    {
        auto sizes = parse_sizes(flags.sizes);
        bool arrow = flags.mode == "arrow";
        generate::InstanceSpec spec;
        if (! arrow)
            spec.kind = generate::parse_shape_kind(flags.mode);
        else
            spec.kind = generate::ShapeKind::path;
        spec.w = flags.w;
        spec.exact_sizes = true;
        spec.planted = true;

        auto repeats = std::max<size_t>(1, flags.repeats);
        cout << "# seed=" << flags.seed << "\n";
        cout << "mode,n,w,w_total,k,section_tests,verdict,solver_ms,oracle_ms\n";
        for (auto n : sizes) {
            spec.n = n;
            SolveOptions options;
            options.early_exit = false;
            options.jobs = flags.jobs;

            vector<double> solver_times;
            vector<double> oracle_times;
            SolveReport last;
            size_t w_total = flags.w;
            bool skipped = false;
            std::uint64_t section_tests = 0;
            Verdict verdict;

            if (arrow) {
                generate::Rng rng(flags.seed);
                auto d = generate::random_arrow_diagram(generate::path_graph(n), flags.w, rng);
                w_total = d.width();
                for (size_t r = 0; r < repeats; ++r) {
                    auto start = Clock::now();
                    auto report = cset_inlim(d, options);
                    solver_times.push_back(elapsed_ms(start));
                    verdict = report.verdict;
                    section_tests = 0;
                    for (auto & s : report.slices)
                        section_tests += s.section_tests;
                    last = report.slices.empty() ? SolveReport{} : report.slices.front();
                }
                skipped = true;
            }
            else {
                auto d = generate::random_diagram(spec, flags.seed);
                for (size_t r = 0; r < repeats; ++r) {
                    auto start = Clock::now();
                    last = inlim::inlim(d, options);
                    solver_times.push_back(elapsed_ms(start));
                }
                verdict = last.verdict;
                section_tests = last.section_tests;
                if (oracle::search_space(d) > flags.cap)
                    skipped = true;
                else
                    for (size_t r = 0; r < repeats; ++r) {
                        auto start = Clock::now();
                        auto families = oracle::enumerate_limit(d, flags.cap);
                        oracle_times.push_back(elapsed_ms(start));
                        if (families.empty() != verdict.empty_limit) {
                            cerr << "error: oracle disagrees with solver at n=" << n << "\n";
                            return exit_error;
                        }
                    }
            }

            cout << flags.mode << "," << n << "," << flags.w << "," << w_total << "," << last.fvs.size() << ","
                 << section_tests << "," << (verdict.empty_limit ? "EMPTY" : "NONEMPTY") << ","
                 << format_ms(median(solver_times)) << "," << (skipped ? string("SKIPPED") : format_ms(median(oracle_times))) << "\n";
        }
        return 0;
    }

    auto report_error(const std::exception & e) -> int
    {
        cerr << "error: " << e.what() << "\n";
        if (auto * bad = dynamic_cast<const InvalidInput *>(&e))
            for (auto & v : bad->violations())
                cerr << "violation: " << v << "\n";
        return exit_error;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Decide whether the limit of a graph-shaped diagram of finite sets is empty"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    string file, category_file, template_spec = "k3";
    std::uint64_t cap = oracle::default_cap;
    size_t k_max = 8;
    SolveFlags solve_flags;
    GenFlags gen_flags;
    BenchFlags bench_flags;

    auto solve = app.add_subcommand("solve", "Decide emptiness of a diagram (exit 0 EMPTY, 1 NONEMPTY, 2 error)");
    solve->add_option("diagram", file, "Diagram JSON file")->required();
    add_solve_flags(solve, solve_flags);
    solve->add_flag("--witness", solve_flags.witness, "Print a matching family when NONEMPTY");

    auto oracle_cmd = app.add_subcommand("oracle", "Decide emptiness by enumerating every tuple");
    oracle_cmd->add_option("diagram", file, "Diagram JSON file")->required();
    oracle_cmd->add_option("--cap", cap, "Largest product of vertex set sizes to enumerate")->capture_default_str();

    auto image_cmd = app.add_subcommand("image", "Print the image diagram of a forest-shaped diagram");
    image_cmd->add_option("diagram", file, "Diagram JSON file")->required();

    auto hom = app.add_subcommand("hom", "Decide whether a decomposed graph maps homomorphically into a template");
    hom->add_option("decomposition", file, "Decomposition JSON file")->required();
    hom->add_option("--template", template_spec, "k<n> or file:<graph.json>")->capture_default_str();
    add_solve_flags(hom, solve_flags);
    hom->add_flag("--witness", solve_flags.witness, "Print the homomorphism when one exists");

    auto cset = app.add_subcommand("cset-solve", "Decide emptiness of a diagram of C-sets");
    cset->add_option("category", category_file, "Category JSON file")->required();
    cset->add_option("diagram", file, "C-set diagram JSON file")->required();
    add_solve_flags(cset, solve_flags);

    auto fvs = app.add_subcommand("fvs", "Find a feedback vertex set of a graph or of a diagram's shape");
    fvs->add_option("graph", file, "Graph or diagram JSON file")->required();
    fvs->add_option("--k-max", k_max, "Largest set to search for")->capture_default_str();

    auto gen = app.add_subcommand("gen", "Print a seeded random diagram");
    gen->add_option("--kind", gen_flags.kind, "tree, path, cycle or random")->capture_default_str();
    gen->add_option("--n", gen_flags.n, "Shape vertices")->capture_default_str();
    gen->add_option("--w", gen_flags.w, "Largest set size")->capture_default_str();
    gen->add_option("--seed", gen_flags.seed, "Random seed")->capture_default_str();
    gen->add_option("--p", gen_flags.p, "Edge probability for random shapes")->capture_default_str();
    gen->add_option("--min-size", gen_flags.min_size, "Smallest set size")->capture_default_str();
    gen->add_flag("--exact", gen_flags.exact, "Every set has exactly w elements");
    gen->add_flag("--planted", gen_flags.planted, "Hide one matching family so the limit is nonempty");

    auto bench = app.add_subcommand("bench", "Time the solver and the naive oracle, CSV on standard output");
    bench->add_option("--mode", bench_flags.mode, "path, tree, cycle, random or arrow")->capture_default_str();
    bench->add_option("--sizes", bench_flags.sizes, "Comma separated shape sizes")->capture_default_str();
    bench->add_option("--w", bench_flags.w, "Set size")->capture_default_str();
    bench->add_option("--repeats", bench_flags.repeats, "Runs per size; the median is reported")->capture_default_str();
    bench->add_option("--seed", bench_flags.seed, "Random seed")->capture_default_str();
    bench->add_option("--cap", bench_flags.cap, "Oracle cap")->capture_default_str();
    bench->add_option("--jobs", bench_flags.jobs, "Threads for section tests")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    for (auto * sub : {solve, hom, cset})
        if (sub->parsed())
            solve_flags.fvs_given = sub->count("--fvs") > 0;

    try {
        if (solve->parsed())
            return run_solve(file, solve_flags);
        if (oracle_cmd->parsed())
            return run_oracle(file, cap);
        if (image_cmd->parsed())
            return run_image(file);
        if (hom->parsed())
            return run_hom(file, template_spec, solve_flags);
        if (cset->parsed())
            return run_cset(category_file, file, solve_flags);
        if (fvs->parsed())
            return run_fvs(file, k_max);
        if (gen->parsed())
            return run_gen(gen_flags);
        if (bench->parsed())
            return run_bench(bench_flags);
    }
    catch (const std::exception & e) {
        return report_error(e);
    }
    return exit_error;
}
