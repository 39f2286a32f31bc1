#include <complex>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopper/decomposer.hpp"
#include "hopper/io.hpp"
#include "hopper/planner.hpp"
#include "hopper/search.hpp"
#include "hopper/similarity.hpp"

namespace {

using namespace hopper;

std::string position_line(const Configuration& c, int p) {
    std::ostringstream os;
    os << "piece " << p << ": ";
    if (c.backend() == Backend::Cyclotomic) {
        os << c.cyc_pos(p).to_string();
        const std::complex<double> z = c.cyc_pos(p).embed();
        os << "  ~ (" << float12(z.real()) << ", " << float12(z.imag()) << ")";
    } else {
        os << "(";
        const auto& v = c.rat_pos(p);
        for (size_t k = 0; k < v.size(); ++k) {
            if (k) os << ", ";
            os << v[k];
        }
        os << ")  ~ (";
        for (size_t k = 0; k < v.size(); ++k) {
            if (k) os << ", ";
            os << float12(static_cast<double>(v[k]));
        }
        os << ")";
    }
    return os.str();
}

int cmd_simulate(const std::string& config_path, const std::string& jumps_path,
                 const std::string& out_path) {
    const Configuration start = parse_config_json(read_text_file(config_path));
    const JumpSequence seq = parse_jumps(read_text_file(jumps_path));
    for (const Jump& j : seq) validate_jump(start, j);
    const Configuration final_c = apply_sequence(start, seq);

    const std::string final_json = config_to_json(final_c);
    if (!out_path.empty())
        write_text_file_atomic(out_path, final_json);
    else
        std::cout << final_json;

    for (int p = 0; p < final_c.pieces(); ++p) std::cout << position_line(final_c, p) << "\n";
    std::cout << "regular " << final_c.pieces() << "-gon: "
              << (is_regular_ngon(final_c) ? "yes" : "no") << "\n";
    bool comparable = true;
    if (start.backend() == Backend::Rational && start.dim() != 2) comparable = false;
    if (comparable) {
        const Similarity sim = similar_up_to_translation(start, final_c);
        if (sim.similar) {
            std::cout << "similar to start: yes (" << (sim.reflected ? "reflected" : "direct")
                      << "), scale " << float12(sim.scale) << "\n";
        } else {
            std::cout << "similar to start: no\n";
        }
    } else {
        std::cout << "similar to start: similarity test supports planar configurations only\n";
    }
    return 0;
}

int cmd_enlarge(int N, const std::string& plan_out, const std::string& jumps_out) {
    const EnlargementPlan plan = plan_enlargement(N);
    verify_plan(plan);

    std::ostringstream jumps_text;
    jumps_text << "# enlarging jump sequence for the regular " << N << "-gon\n"
               << "# scale " << float12(plan.scale_float()) << ", " << plan.jumps.size()
               << " jumps\n"
               << format_jumps(plan.jumps) << "\n";
    const std::string plan_json = plan_to_json(plan);
    if (!plan_out.empty()) write_text_file_atomic(plan_out, plan_json);
    if (!jumps_out.empty()) write_text_file_atomic(jumps_out, jumps_text.str());
    std::cout << plan_json;
    std::cerr << "plan verified by exact re-simulation: regular " << N << "-gon, scale "
              << float12(plan.scale_float()) << ", " << plan.jumps.size() << " jumps\n";
    return 0;
}

int cmd_decompose(const std::string& matrix_path, const std::string& out_path) {
    const IntMatrix a = parse_matrix_json(read_text_file(matrix_path));
    const JumpSequence word = decompose(a);
    if (sequence_to_matrix(word, a.n()) != a)
        throw VerificationFailure("decompose: word product mismatch");
    std::ostringstream text;
    text << "# " << word.size() << " jumps\n" << format_jumps(word) << "\n";
    if (!out_path.empty())
        write_text_file_atomic(out_path, text.str());
    else
        std::cout << text.str();
    std::cerr << "decomposed into " << word.size() << " jumps (product re-verified)\n";
    return 0;
}

int cmd_check_membership(const std::string& matrix_path) {
    const IntMatrix a = parse_matrix_json(read_text_file(matrix_path));
    const bool ok = is_member(a);
    std::cout << (ok ? "member" : "not a member") << "\n";
    return ok ? 0 : 1;
}

int cmd_gadget(const std::string& config_path, int piece, const std::string& out_path) {
    const Configuration c = parse_config_json(read_text_file(config_path));
    const JumpSequence seq = translation_gadget(c, piece);
    std::ostringstream text;
    text << "# translation gadget through piece " << piece << "\n"
         << format_jumps(seq) << "\n";
    if (!out_path.empty())
        write_text_file_atomic(out_path, text.str());
    else
        std::cout << text.str();
    return 0;
}

int cmd_normalize(const std::string& config_path, const std::string& jumps_path,
                  const std::string& out_path) {
    const Configuration c = parse_config_json(read_text_file(config_path));
    const JumpSequence seq = parse_jumps(read_text_file(jumps_path));
    for (const Jump& j : seq) validate_jump(c, j);
    auto [w, norm] = normalize_sequence(c, seq);
    std::ostringstream text;
    text << "# normalized: piece 0 never moves; original = normalized + translation by 2*P*w\n"
         << "# w =";
    for (const Int& x : w) text << ' ' << x;
    text << "\n" << format_jumps(norm) << "\n";
    if (!out_path.empty())
        write_text_file_atomic(out_path, text.str());
    else
        std::cout << text.str();
    std::cout << "w =";
    for (const Int& x : w) std::cout << ' ' << x;
    std::cout << "\n" << norm.size() << " jumps after normalization (was " << seq.size() << ")\n";
    return 0;
}

int cmd_search(const std::string& config_path, const std::string& goal_name,
               const std::string& target_path, int depth, unsigned long long node_cap,
               const std::string& strategy, bool no_dedup, const std::string& out_path) {
    SearchSpec spec;
    spec.start = parse_config_json(read_text_file(config_path));
    spec.max_depth = depth;
    spec.node_cap = node_cap;
    spec.dedup = !no_dedup;
    if (goal_name == "similar-larger") {
        spec.goal = Goal::SimilarLarger;
    } else if (goal_name == "exact-target") {
        spec.goal = Goal::ExactTarget;
        if (target_path.empty())
            throw std::invalid_argument("search: --goal exact-target needs --target");
        spec.target = parse_config_json(read_text_file(target_path));
    } else {
        throw std::invalid_argument("search: goal must be similar-larger or exact-target");
    }

    const SearchReport rep = strategy == "iddfs" ? iddfs_search(spec) : bfs_search(spec);
    if (rep.found && !goal_satisfied(spec, apply_sequence(spec.start, *rep.found)))
        throw VerificationFailure("search: found sequence fails replay");

    const std::string report = search_report_to_json(rep);
    if (!out_path.empty()) write_text_file_atomic(out_path, report);
    std::cout << report;
    return 0;
}

int cmd_render(const std::string& config_path, const std::string& jumps_path,
               const std::string& out_path) {
    const Configuration c = parse_config_json(read_text_file(config_path));
    const JumpSequence seq = parse_jumps(read_text_file(jumps_path));
    for (const Jump& j : seq) validate_jump(c, j);
    write_text_file_atomic(out_path, render_svg(c, seq));
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planner/verifier for grasshopper jump reconfiguration"};
    app.require_subcommand(1);

    std::string config_path, jumps_path, out_path, plan_out, jumps_out, matrix_path;
    std::string goal_name = "similar-larger", target_path, strategy = "bfs";
    int N = 0, piece = 1, depth = 1;
    unsigned long long node_cap = 50000000ULL;
    bool no_dedup = false;

    auto* sim = app.add_subcommand("simulate", "apply a jump sequence to a configuration");
    sim->add_option("--config", config_path, "configuration JSON")->required();
    sim->add_option("--jumps", jumps_path, "jump sequence file")->required();
    sim->add_option("--out", out_path, "write final configuration JSON here");

    auto* enl = app.add_subcommand("enlarge", "synthesize a verified enlarging sequence");
    enl->add_option("N", N, "number of pieces (N >= 3)")->required();
    enl->add_option("--plan-out", plan_out, "write plan JSON here");
    enl->add_option("--jumps-out", jumps_out, "write the jump sequence here");

    auto* dec = app.add_subcommand("decompose", "decompose a matrix into a jump word");
    dec->add_option("--matrix", matrix_path, "matrix JSON (array of rows)")->required();
    dec->add_option("--out", out_path, "write the jump word here");

    auto* chk = app.add_subcommand("check-membership", "test the two group-membership conditions");
    chk->add_option("--matrix", matrix_path, "matrix JSON (array of rows)")->required();

    auto* gad = app.add_subcommand("gadget", "emit the translation gadget through a piece");
    gad->add_option("--config", config_path, "configuration JSON")->required();
    gad->add_option("--piece", piece, "ordinary piece index (1..n)")->required();
    gad->add_option("--out", out_path, "write the gadget sequence here");

    auto* nor = app.add_subcommand("normalize", "rewrite a sequence so piece 0 never moves");
    nor->add_option("--config", config_path, "configuration JSON")->required();
    nor->add_option("--jumps", jumps_path, "jump sequence file")->required();
    nor->add_option("--out", out_path, "write the normalized sequence here");

    auto* sea = app.add_subcommand("search", "bounded exhaustive search for goal sequences");
    sea->add_option("--config", config_path, "start configuration JSON")->required();
    sea->add_option("--depth", depth, "maximum sequence length")->required();
    sea->add_option("--goal", goal_name, "similar-larger (default) or exact-target");
    sea->add_option("--target", target_path, "target configuration JSON (exact-target)");
    sea->add_option("--node-cap", node_cap, "abort after this many states (default 5e7)");
    sea->add_option("--strategy", strategy, "bfs (default) or iddfs");
    sea->add_flag("--no-dedup", no_dedup, "disable canonical-state deduplication");
    sea->add_option("--out", out_path, "write the report JSON here");

    auto* ren = app.add_subcommand("render", "draw a sequence as an SVG");
    ren->add_option("--config", config_path, "configuration JSON")->required();
    ren->add_option("--jumps", jumps_path, "jump sequence file")->required();
    ren->add_option("--out", out_path, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, jumps_path, out_path);
        if (enl->parsed()) return cmd_enlarge(N, plan_out, jumps_out);
        if (dec->parsed()) return cmd_decompose(matrix_path, out_path);
        if (chk->parsed()) return cmd_check_membership(matrix_path);
        if (gad->parsed()) return cmd_gadget(config_path, piece, out_path);
        if (nor->parsed()) return cmd_normalize(config_path, jumps_path, out_path);
        if (sea->parsed())
            return cmd_search(config_path, goal_name, target_path, depth, node_cap, strategy,
                              no_dedup, out_path);
        if (ren->parsed()) return cmd_render(config_path, jumps_path, out_path);
    } catch (const ImpossibleN& e) {
        std::cerr << "impossible: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const SpecialPieceMoved& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
