#include "treespace/reports.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treespace {

namespace {

using ojson = nlohmann::ordered_json;

ojson character_block(const Character& chi) {
    ojson values;
    for (const auto& type : partitions_of(chi.m))
        values[partition_key(type)] = chi.values.at(partition_key(type)).str();
    ojson out;
    out["group_degree"] = chi.m;
    out["dimension"] = chi.dimension().str();
    out["values"] = std::move(values);
    return out;
}

ojson homology_block(const HomologyResult& h) {
    ojson out = ojson::array();
    for (int k = 0; k < static_cast<int>(h.degrees.size()); ++k) {
        ojson row;
        row["degree"] = k;
        row["betti"] = h.at(k).betti;
        ojson torsion = ojson::array();
        for (const Int& t : h.at(k).torsion) torsion.push_back(t.str());
        row["torsion"] = std::move(torsion);
        out.push_back(std::move(row));
    }
    return out;
}

OrientedComplex build_space(const RunConfig& cfg) {
    if (cfg.space == "tree-space") return build_tree_complex(cfg.n);
    if (cfg.space == "partition-nerve") return build_partition_nerve(cfg.n);
    throw std::invalid_argument("unknown space: " + cfg.space);
}

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

}  // namespace

void check_config(const RunConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "text")
        throw std::invalid_argument("format must be json or text");
    if (cfg.space != "tree-space" && cfg.space != "partition-nerve")
        throw std::invalid_argument("space must be tree-space or partition-nerve");
    if (cfg.depth != "quick" && cfg.depth != "full")
        throw std::invalid_argument("depth must be quick or full");
    if (cfg.jobs < 0) throw std::invalid_argument("jobs must be >= 0");

    if (cfg.command == "enumerate") {
        if (cfg.n < 1 || cfg.n > 7) throw std::invalid_argument("enumerate supports 1 <= n <= 7");
    } else if (cfg.command == "verify") {
        if (!cfg.complex_file.empty()) return;
        if (cfg.n < 3 || cfg.n > 7) throw std::invalid_argument("verify supports 3 <= n <= 7");
    } else if (cfg.command == "character") {
        if (cfg.module == "lie" || cfg.module == "superlie") {
            if (cfg.n < 2 || cfg.n > 7)
                throw std::invalid_argument("character --module " + cfg.module +
                                            " supports 2 <= n <= 7");
        } else if (cfg.module == "hatlie" || cfg.module == "homology") {
            if (cfg.n < 3 || cfg.n > 5)
                throw std::invalid_argument("character --module " + cfg.module +
                                            " supports 3 <= n <= 5");
        } else {
            throw std::invalid_argument("module must be lie, superlie, hatlie or homology");
        }
    } else if (cfg.command == "whitehouse") {
        if (cfg.n < 3 || cfg.n > 5) throw std::invalid_argument("whitehouse supports 3 <= n <= 5");
    } else if (cfg.command == "cycle") {
        if (cfg.n < 3 || cfg.n > 7) throw std::invalid_argument("cycle supports 3 <= n <= 7");
    } else {
        throw std::invalid_argument("unknown command: " + cfg.command);
    }
}

ojson report_enumerate(const RunConfig& cfg) {
    OrientedComplex c = build_space(cfg);
    ojson j;
    j["schema"] = 1;
    j["kind"] = "enumerate";
    j["space"] = cfg.space;
    j["n"] = cfg.n;
    j["empty"] = c.empty();
    if (!c.note.empty()) j["note"] = c.note;
    j["f_vector"] = c.f_vector();
    long long total = 0;
    for (long long f : c.f_vector()) total += f;
    j["total"] = total;
    j["top_count"] = c.empty() ? 0 : c.simplex_count(c.dim);
    if (cfg.list_items && !c.empty()) {
        ojson levels = ojson::array();
        for (int k = 0; k <= c.dim; ++k) levels.push_back(c.keys[k]);
        j["simplices"] = std::move(levels);
    }
    return j;
}

ojson report_character(const RunConfig& cfg) {
    Character chi;
    if (cfg.module == "lie")
        chi = lie_character(cfg.n, Flavor::Ordinary);
    else if (cfg.module == "superlie")
        chi = lie_character(cfg.n, Flavor::Super);
    else if (cfg.module == "hatlie")
        chi = hat_lie_character(cfg.n);
    else if (cfg.module == "homology")
        chi = action_character(build_tree_complex(cfg.n), cfg.n - 3, true);
    else
        throw std::invalid_argument("unknown character module: " + cfg.module);
    ojson j;
    j["schema"] = 1;
    j["kind"] = "character";
    j["module"] = cfg.module;
    j["n"] = cfg.n;
    j["character"] = character_block(chi);
    return j;
}

ojson report_whitehouse(const RunConfig& cfg) {
    ojson j;
    j["schema"] = 1;
    j["kind"] = "whitehouse";
    j["n"] = cfg.n;

    WhitehouseCharacterReport chars = whitehouse_character_check(cfg.n);
    ojson cj;
    cj["induced"] = character_block(chars.induced);
    cj["lie_next"] = character_block(chars.lie_next);
    cj["hat"] = character_block(chars.hat);
    j["characters"] = std::move(cj);
    j["character_identity"] = chars.equal;
    j["mismatch_classes"] = chars.mismatch_classes;

    bool ok = chars.equal;
    if (cfg.n <= 4) {
        PairComplex pair = build_complement_subcomplex(cfg.n);
        ojson pj;
        pj["ambient_f"] = pair.ambient.f_vector();
        pj["sub_f"] = pair.sub.f_vector();
        pj["relative_f"] = pair.rel_f;
        j["pair"] = std::move(pj);
        j["sub_homology"] = homology_block(homology(pair.sub, true));
        j["relative_homology"] = homology_block(relative_homology(pair));
        ExactnessReport ex = exactness_check(pair);
        ojson ej;
        ej["ranks"] = std::vector<long long>{ex.rank_left, ex.rank_middle, ex.rank_right};
        ej["left_injective"] = ex.left_injective;
        ej["cokernel_torsion_free"] = ex.cokernel_torsion_free;
        ej["middle_exact"] = ex.middle_exact;
        ej["right_surjective"] = ex.right_surjective;
        ej["exact"] = ex.exact();
        if (!ex.diagnostic.empty()) ej["diagnostic"] = ex.diagnostic;
        j["integral"] = std::move(ej);
        ok = ok && ex.exact();
    } else {
        j["integral"] = {{"skipped", "integral certification is run for n <= 4"}};
    }
    j["all_passed"] = ok;
    return j;
}

ojson report_cycle(const RunConfig& cfg) {
    OrientedComplex c = build_tree_complex(cfg.n);
    ModuleChain f = build_fundamental_cycle(c, cfg.jobs);
    ojson j = ojson::parse(dump_cycle_json(c, f));
    j["boundary_is_zero"] = boundary_of_module_chain(f, c).is_zero();
    if (cfg.n == 5) {
        N5Census census = verify_n5_cycle_census(c, f);
        ojson cj;
        cj["chain_end"] = census.chain_end;
        cj["chain_mid"] = census.chain_mid;
        cj["cross"] = census.cross;
        cj["all_terms_match"] = census.all_terms_match;
        j["census_check"] = std::move(cj);
    }
    return j;
}

ojson report_verify(const RunConfig& cfg) {
    ojson j;
    j["schema"] = 1;
    j["kind"] = "verify";
    ojson checks = ojson::array();
    bool all = true;
    auto add_check = [&](const std::string& name, bool pass, long long ms,
                         const std::string& detail) {
        ojson c;
        c["name"] = name;
        c["pass"] = pass;
        c["ms"] = ms;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        all = all && pass;
    };

    if (!cfg.complex_file.empty()) {
        j["complex_file"] = cfg.complex_file;
        auto t0 = std::chrono::steady_clock::now();
        std::ifstream in(cfg.complex_file);
        if (!in) throw std::invalid_argument("cannot open " + cfg.complex_file);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string diag;
        try {
            diag = validate_complex_dump(load_complex_json(buf.str()));
        } catch (const std::exception& e) {
            diag = std::string("unreadable dump: ") + e.what();
        }
        add_check("dump-structure", diag.empty(), ms_since(t0), diag);
        j["checks"] = std::move(checks);
        j["all_passed"] = all;
        return j;
    }

    j["n"] = cfg.n;
    j["depth"] = cfg.depth;
    j["seed"] = cfg.seed;

    auto t0 = std::chrono::steady_clock::now();
    OrientedComplex tree = build_tree_complex(cfg.n);
    add_check("census",
              tree.simplex_count(tree.dim) == double_factorial_odd(cfg.n),
              ms_since(t0), "top simplices vs (2n-3)!!");

    if (cfg.n >= 4) {
        t0 = std::chrono::steady_clock::now();
        auto hist = codim1_incidence_report(tree);
        bool three = hist.size() == 1 && hist.begin()->first == 3;
        add_check("incidence", three, ms_since(t0),
                  "every codimension-1 simplex lies in exactly 3 top simplices");
    }

    t0 = std::chrono::steady_clock::now();
    add_check("boundary-square", boundary_square_is_zero(tree), ms_since(t0), "");

    if (cfg.depth == "full") {
        std::mt19937_64 rng(cfg.seed);

        if (cfg.n >= 4 && cfg.n <= 6) {
            t0 = std::chrono::steady_clock::now();
            HomologyResult h = homology(tree, true);
            add_check("homology-tree", h.concentrated_free(cfg.n - 3, factorial(cfg.n - 1)),
                      ms_since(t0), "free of rank (n-1)! in degree n-3");
        }
        if (cfg.n >= 4 && cfg.n <= 5) {
            t0 = std::chrono::steady_clock::now();
            HomologyResult h = homology(build_partition_nerve(cfg.n), true);
            add_check("homology-nerve", h.concentrated_free(cfg.n - 3, factorial(cfg.n - 1)),
                      ms_since(t0), "partition nerve Betti data matches the tree space");
        }

        t0 = std::chrono::steady_clock::now();
        ModuleChain cycle = build_fundamental_cycle(tree, cfg.jobs);
        bool dzero = boundary_of_module_chain(cycle, tree).is_zero();
        add_check("cycle-boundary", dzero, ms_since(t0), "the fundamental cycle is closed");

        if (cfg.n <= 6) {
            t0 = std::chrono::steady_clock::now();
            bool inv = true;
            for (int i = 1; i + 1 <= cfg.n; ++i)
                inv = inv && verify_invariance(cycle, tree, Perm::transposition(cfg.n + 1, i, i + 1));
            // One random permutation fixing 0, drawn from the seed.
            std::vector<int> img(cfg.n);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            std::vector<int> lift(cfg.n + 1);
            lift[0] = 0;
            for (int i = 0; i < cfg.n; ++i) lift[i + 1] = img[i] + 1;
            inv = inv && verify_invariance(cycle, tree, Perm(lift));
            add_check("cycle-invariance", inv, ms_since(t0),
                      "all adjacent transpositions plus one seeded permutation");
        }

        if (cfg.n == 5) {
            t0 = std::chrono::steady_clock::now();
            N5Census census = verify_n5_cycle_census(tree, cycle);
            add_check("cycle-census",
                      census.chain_end == 60 && census.chain_mid == 30 && census.cross == 15 &&
                          census.all_terms_match,
                      ms_since(t0), "60/30/15 split with the displayed coefficients");
        }

        if (cfg.n <= 6) {
            t0 = std::chrono::steady_clock::now();
            bool theta_ok = true;
            std::set<std::vector<int>> images;
            for (const Perm& sigma : all_perms(cfg.n - 1)) {
                SuperLieElement v = theta_eval(caterpillar_indicator(tree, sigma), cycle);
                auto [sign, word] = v.single_basis_term();
                std::vector<int> expect(cfg.n - 1);
                for (int i = 0; i < cfg.n - 1; ++i) expect[i] = sigma(i) + 1;
                if (sign == 0 || word != expect) theta_ok = false;
                images.insert(word);
            }
            theta_ok = theta_ok && images.size() == static_cast<std::size_t>(factorial(cfg.n - 1));
            add_check("theta-basis", theta_ok, ms_since(t0),
                      "caterpillar cochains map to signed basis brackets");

            t0 = std::chrono::steady_clock::now();
            Cochain g;
            for (long long row = 0; row < tree.simplex_count(tree.dim - 1); ++row)
                if (rng() % 3 == 0)
                    g[static_cast<int>(row)] = Int(static_cast<long long>(rng() % 9) - 4);
            Cochain f0 = caterpillar_indicator(tree, Perm::identity(cfg.n - 1));
            Cochain shifted = f0;
            for (const auto& [id, v] : coboundary(tree, g)) {
                shifted[id] += v;
                if (shifted[id].is_zero()) shifted.erase(id);
            }
            add_check("theta-coboundary",
                      theta_eval(shifted, cycle) == theta_eval(f0, cycle), ms_since(t0),
                      "pairing is blind to seeded coboundaries");
        }

        if (cfg.n == 4 || cfg.n == 5) {
            t0 = std::chrono::steady_clock::now();
            Character chi = action_character(tree, cfg.n - 3, true);
            bool reg = restrict_character(restrict_character(chi)) == regular_character(cfg.n - 1);
            add_check("regular-restriction", reg, ms_since(t0),
                      "top homology restricts to the regular character");

            t0 = std::chrono::steady_clock::now();
            bool super_match = restrict_character(chi) == lie_character(cfg.n, Flavor::Super);
            add_check("homology-vs-super-character", super_match, ms_since(t0),
                      "homology character equals the sign-twisted Lie character");
        }
    }

    j["checks"] = std::move(checks);
    j["all_passed"] = all;
    return j;
}

bool report_passed(const ojson& report) {
    if (report.contains("all_passed")) return report.at("all_passed").get<bool>();
    if (report.contains("boundary_is_zero") && !report.at("boundary_is_zero").get<bool>())
        return false;
    if (report.contains("census_check") &&
        !report.at("census_check").at("all_terms_match").get<bool>())
        return false;
    return true;
}

namespace {
void render_rec(const ojson& v, const std::string& prefix, std::ostringstream& os) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items())
            render_rec(val, prefix.empty() ? key : prefix + "." + key, os);
        return;
    }
    if (v.is_array()) {
        bool scalars = std::all_of(v.begin(), v.end(),
                                   [](const ojson& x) { return !x.is_object() && !x.is_array(); });
        if (scalars) {
            os << prefix << ": [";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ", ";
                os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            }
            os << "]\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i)
                render_rec(v[i], prefix + "[" + std::to_string(i) + "]", os);
        }
        return;
    }
    os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}
}  // namespace

std::string render_text(const ojson& report) {
    std::ostringstream os;
    render_rec(report, "", os);
    return os.str();
}

std::string render_json(const ojson& report) { return report.dump(2) + "\n"; }

}  // namespace treespace
