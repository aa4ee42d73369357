#include "leecodes/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leecodes/constructions.hpp"
#include "leecodes/enumeration.hpp"
#include "leecodes/json_io.hpp"

namespace leecodes::cli {

namespace {

Json read_json(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input: " + path);
    return Json::parse(in);
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output: " + path);
    out << text << "\n";
}

WindowRect parse_window(const std::string& spec) {
    WindowRect w;
    char c1, c2, c3;
    std::istringstream in(spec);
    if (!(in >> w.x0 >> c1 >> w.y0 >> c2 >> w.x1 >> c3 >> w.y1) || c1 != ',' || c2 != ',' ||
        c3 != ',')
        throw std::invalid_argument("window must be x0,y0,x1,y1");
    return w;
}

Sequence parse_sequence(const std::string& spec, int modulus) {
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "constant") return Sequence::constant(arg.empty() ? 0 : std::stoi(arg), modulus);
    if (head == "alternating") return Sequence::alternating(modulus);
    if (head == "sturmian") return Sequence::sturmian(modulus);
    if (head == "random") {
        if (arg.empty()) throw std::invalid_argument("random sequence needs a seed: random:SEED");
        return Sequence::seeded_random(std::stoull(arg), modulus);
    }
    if (head == "file") {
        Json j = read_json(arg);
        auto values = j.at("values").get<std::vector<int>>();
        std::int64_t first = j.value("first_index", std::int64_t{0});
        return Sequence::explicit_values(std::move(values), first, modulus);
    }
    throw std::invalid_argument("unknown sequence spec: " + spec);
}

std::vector<PermutationPlan> read_plans(const std::string& path) {
    Json j = read_json(path);
    std::vector<PermutationPlan> plans;
    if (j.is_array())
        for (const auto& item : j) plans.push_back(permutation_from_json(item));
    else
        plans.push_back(permutation_from_json(j));
    return plans;
}

int cmd_construct(const std::string& kind, int n, Coord tau, int R, int i, int q, int r,
                  bool reduce, const Limits& limits, const std::string& output) {
    auto emit_lattice_or_code = [&](const Lattice& lattice) {
        if (reduce) {
            auto lc = reduce_to_modular(lattice, limits);
            if (!lc.quotient.has_value())
                throw CapExceeded("construct: quotient too large to materialize");
            write_text(canonical_dump(code_to_json(*lc.quotient)), output);
        } else {
            write_text(canonical_dump(lattice_to_json(lattice)), output);
        }
    };
    if (kind == "lee-single") {
        write_text(canonical_dump(code_to_json(lee_single_error_code(n, tau, limits))), output);
    } else if (kind == "golomb-welch") {
        auto lc = golomb_welch_2d(R, limits);
        if (reduce)
            write_text(canonical_dump(code_to_json(*lc.quotient)), output);
        else
            write_text(canonical_dump(lattice_to_json(lc.lattice)), output);
    } else if (kind == "diameter4") {
        emit_lattice_or_code(diameter4_lattice(n));
    } else if (kind == "diameter2d") {
        emit_lattice_or_code(diameter_2d_family(R, i));
    } else if (kind == "minkowski") {
        emit_lattice_or_code(minkowski_code());
    } else if (kind == "hamming") {
        auto field = FieldTable::make(q);
        write_text(canonical_dump(code_to_json(hamming_code(field, r, limits))), output);
    } else {
        throw std::invalid_argument("unknown construct kind: " + kind);
    }
    return 0;
}

int cmd_verify(const std::string& input, int radius, int even_distance, const std::string& mode,
               std::size_t samples, std::uint64_t seed, const Limits& limits,
               const std::string& output) {
    Json j = read_json(input);
    Certificate cert;
    VerifyMode vm = mode == "exhaustive" ? VerifyMode::Exhaustive
                    : mode == "formula"  ? VerifyMode::Formula
                                         : VerifyMode::Auto;
    if (j.value("kind", "") == "lattice") {
        Lattice lattice = lattice_from_json(j);
        auto lc = reduce_to_modular(
            lattice, limits,
            big_pow(lattice.period(), static_cast<unsigned long>(lattice.dim())) <=
                BigInt(static_cast<unsigned long>(limits.max_points)));
        if (even_distance > 0)
            cert = is_diameter_perfect(lc, even_distance, limits);
        else
            cert = is_perfect(lc, radius, vm, limits);
    } else {
        ModularCode code = code_from_json(j);
        if (samples > 0) {
            cert = local_cover_check([&](CoordSpan w) { return code.contains(w); }, code.n(),
                                     code.m(), radius, samples, seed, limits);
        } else if (even_distance > 0) {
            cert = is_diameter_perfect(code, even_distance, limits);
        } else {
            cert = is_perfect(code, radius, vm, limits);
        }
    }
    write_text(canonical_dump(certificate_to_json(cert)), output);
    return cert.pass ? 0 : 1;
}

int cmd_double(const std::string& a, const std::string& b, const std::string& perm,
               const Limits& limits, const std::string& output) {
    ModularCode c1 = code_from_json(read_json(a));
    ModularCode c2 = code_from_json(read_json(b));
    PermutationPlan pi = perm.empty() || perm == "identity"
                             ? PermutationPlan::identity(2 * c1.n())
                             : permutation_from_json(read_json(perm));
    write_text(canonical_dump(code_to_json(lee_double(c1, c2, pi, limits))), output);
    return 0;
}

int cmd_product(const std::string& kind, const std::string& a, const std::string& b,
                const std::string& perm, const Limits& limits, const std::string& output) {
    if (kind == "phelps") {
        ModularCode c = code_from_json(read_json(a));
        write_text(canonical_dump(code_to_json(phelps_double(c, limits))), output);
    } else if (kind == "phelps-perm") {
        ModularCode cb = code_from_json(read_json(a));
        ModularCode cc = code_from_json(read_json(b));
        PermutationPlan pi = perm.empty() || perm == "identity"
                                 ? PermutationPlan::identity(cb.n() + 1)
                                 : permutation_from_json(read_json(perm));
        write_text(canonical_dump(code_to_json(phelps_double_permuted(cb, cc, pi, limits))),
                   output);
    } else if (kind == "qary") {
        ModularCode inner = code_from_json(read_json(a));
        ModularCode outer = code_from_json(read_json(b));
        write_text(canonical_dump(code_to_json(qary_product(inner, outer, limits))), output);
    } else if (kind == "lee") {
        ModularCode inner = code_from_json(read_json(a));
        ModularCode outer = code_from_json(read_json(b));
        std::vector<PermutationPlan> plans;
        if (perm.empty() || perm == "identity") {
            for (int t = 0; t < outer.n(); ++t)
                plans.push_back(PermutationPlan::identity(2 * inner.n() + 1));
        } else {
            plans = read_plans(perm);
        }
        auto product = lee_product(inner, outer, plans, limits);
        write_text(canonical_dump(code_to_json(product.materialize(limits))), output);
    } else {
        throw std::invalid_argument("unknown product kind: " + kind);
    }
    return 0;
}

int cmd_tile(int R, const std::string& sequence_spec, const std::string& window_spec,
             int probe_max, int axis, const std::string& pgm, const Limits& limits,
             const std::string& output) {
    Sequence s = parse_sequence(sequence_spec, R + 1);
    CenterSet centers = build_center_set(std::move(s), R);
    WindowRect window = parse_window(window_spec);
    auto report = verify_window_tiling(centers, window,
                                       axis == 0 ? std::nullopt : std::optional<int>(axis), limits);
    Json j = window_report_to_json(report);
    if (probe_max > 0) {
        Json survivors = Json::array();
        for (const auto& v : tiling_periodicity_probe(centers, window, probe_max))
            survivors.push_back({v[0], v[1]});
        j["probe_max"] = probe_max;
        j["surviving_periods"] = std::move(survivors);
    }
    if (!pgm.empty()) write_multiplicity_pgm(report, pgm);
    write_text(canonical_dump(j), output);
    return report.exact_cover ? 0 : 1;
}

int cmd_count(int r, int p, const std::string& output) {
    write_text(count_distinct_diameter_perfect(r, p).get_str(), output);
    return 0;
}

int cmd_info(const std::string& input, const Limits& limits, const std::string& output) {
    Json j = read_json(input);
    Json info;
    if (j.value("kind", "") == "lattice") {
        Lattice lattice = lattice_from_json(j);
        info["kind"] = "lattice_info";
        info["n"] = lattice.dim();
        info["volume"] = lattice.volume().get_str();
        info["period"] = lattice.period();
        info["min_manhattan_distance"] = lattice.min_manhattan_weight(limits);
        auto lc = reduce_to_modular(lattice, limits, false);
        info["quotient_size"] = lc.quotient_size.get_str();
        info["all_rows_even_weight"] = lattice.all_rows_even_weight();
    } else {
        ModularCode code = code_from_json(j);
        info["kind"] = "code_info";
        info["n"] = code.n();
        info["m"] = code.m();
        info["size"] = code.size();
        BigInt space = big_pow(code.m(), static_cast<unsigned long>(code.n()));
        info["redundancy_volume"] =
            (code.size() > 0 && space % BigInt(static_cast<unsigned long>(code.size())) == 0)
                ? Json(exact_div(space, BigInt(static_cast<unsigned long>(code.size()))).get_str())
                : Json(nullptr);
        auto md = code.min_distance(limits);
        if (md.has_value()) info["min_distance"] = *md;
        info["linear"] = code.is_linear();
        std::size_t even = 0, odd = 0;
        CoordVec buf(static_cast<std::size_t>(code.n()));
        for (auto key : code.encoded()) {
            decode_word(key, code.n(), code.m(), buf);
            (lee_weight(buf, code.m()) % 2 == 0 ? even : odd) += 1;
        }
        info["codeword_parity_census"] = {{"even", even}, {"odd", odd}};
    }
    write_text(canonical_dump(info), output);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Perfect and diameter perfect code constructions in the Lee, Manhattan and "
                 "Hamming metrics, with exhaustive desk-scale verification"};
    app.require_subcommand(1);
    app.fallthrough();  // --cap/--jobs/--output may follow the subcommand

    std::size_t cap = Limits{}.max_points;
    int jobs = 1;
    app.add_option("--cap", cap, "enumeration cap in points");
    app.add_option("--jobs", jobs, "upper bound on worker threads")->check(CLI::PositiveNumber);
    std::string output;
    app.add_option("--output", output, "write results to a file instead of stdout");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named code or lattice");
    std::string kind;
    int n = 2, R = 1, i = 0, q = 2, r = 2;
    Coord tau = 1;
    bool reduce = false;
    construct->add_option("--kind", kind,
                          "lee-single | golomb-welch | diameter4 | diameter2d | minkowski | hamming")
        ->required();
    construct->add_option("--n", n, "code length");
    construct->add_option("--tau", tau, "alphabet multiplier for lee-single");
    construct->add_option("--R", R, "radius parameter");
    construct->add_option("--i", i, "index inside diameter2d family");
    construct->add_option("--q", q, "field size for hamming");
    construct->add_option("--r", r, "redundancy for hamming");
    construct->add_flag("--reduce", reduce, "emit the quotient code of a lattice kind");

    // verify
    auto* verify = app.add_subcommand("verify", "check a serialized code or lattice");
    std::string input = "-";
    int radius = 1, even_distance = 0;
    std::string mode = "auto";
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    verify->add_option("--input", input, "code/lattice JSON file, or - for stdin");
    verify->add_option("--radius", radius, "perfect-code radius");
    verify->add_option("--even-distance", even_distance, "diameter-perfect minimum distance");
    verify->add_option("--mode", mode, "auto | exhaustive | formula")
        ->check(CLI::IsMember({"auto", "exhaustive", "formula"}));
    auto* samples_opt =
        verify->add_option("--samples", samples, "sampled local cover check instead of full verify");
    verify->add_option("--seed", seed, "seed for sampled verification");
    samples_opt->needs("--seed");

    // double
    auto* dbl = app.add_subcommand("double", "Lee doubling of two diameter perfect codes");
    std::string in_a, in_b, perm;
    dbl->add_option("--a", in_a, "first code JSON")->required();
    dbl->add_option("--b", in_b, "second code JSON")->required();
    dbl->add_option("--perm", perm, "permutation JSON file or 'identity'");

    // product
    auto* product = app.add_subcommand("product", "product constructions");
    std::string product_kind;
    std::string p_a, p_b, p_perm;
    product->add_option("--kind", product_kind, "phelps | phelps-perm | qary | lee")->required();
    product->add_option("--a", p_a, "first input code JSON")->required();
    product->add_option("--b", p_b, "second input code JSON");
    product->add_option("--perm", p_perm, "permutation JSON (file holds a list for kind=lee)");

    // tile
    auto* tile = app.add_subcommand("tile", "verify a sequence tiling over a window");
    int tile_R = 1, probe_max = 0, axis = 0;
    std::string sequence_spec = "constant:0", window_spec = "0,0,64,64", pgm;
    tile->add_option("--R", tile_R, "anticode radius parameter");
    tile->add_option("--sequence", sequence_spec,
                     "constant:V | alternating | sturmian | random:SEED | file:PATH");
    tile->add_option("--window", window_spec, "x0,y0,x1,y1 (half-open)");
    tile->add_option("--probe-max", probe_max, "periodicity probe bound (0 = skip)");
    tile->add_option("--axis", axis, "anticode seed axis: 0 = auto, 1, 2");
    tile->add_option("--pgm", pgm, "write the multiplicity grid as a PGM image");

    // count
    auto* count = app.add_subcommand("count", "count distinct doubled diameter perfect codes");
    int count_r = 1, count_p = 3;
    count->add_option("--r", count_r, "doubling levels")->required();
    count->add_option("--p", count_p, "odd prime base length")->required();

    // info
    auto* info = app.add_subcommand("info", "parameters of a serialized code or lattice");
    std::string info_input = "-";
    info->add_option("--input", info_input, "code/lattice JSON file, or - for stdin");

    try {
        app.parse(argc, argv);
        Limits limits{cap};
        if (construct->parsed())
            return cmd_construct(kind, n, tau, R, i, q, r, reduce, limits, output);
        if (verify->parsed())
            return cmd_verify(input, radius, even_distance, mode, samples, seed, limits, output);
        if (dbl->parsed()) return cmd_double(in_a, in_b, perm, limits, output);
        if (product->parsed()) return cmd_product(product_kind, p_a, p_b, p_perm, limits, output);
        if (tile->parsed())
            return cmd_tile(tile_R, sequence_spec, window_spec, probe_max, axis, pgm, limits,
                            output);
        if (count->parsed()) return cmd_count(count_r, count_p, output);
        if (info->parsed()) return cmd_info(info_input, limits, output);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace leecodes::cli
