#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scae/scae.hpp"

namespace fs = std::filesystem;
using namespace scae;

namespace {

std::optional<fs::path> as_dir(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    return fs::path(s);
}

int cmd_build(const std::string& family, int rank, int level, const std::string& out, const std::string& cache)
{
    const auto data = cached_build(parse_family(family), rank, level, as_dir(cache));
    save_category(data, out);
    std::cout << data.name << ": " << data.size() << " simples -> " << out << "\n";
    return 0;
}

int cmd_load_check(const std::string& path)
{
    const auto data = load_category(path);
    std::cout << "ok " << data.name << ": " << data.size() << " simples, " << invertibles(data.ring).size()
              << " invertible\n";
    return 0;
}

int cmd_invertibles(const std::string& path)
{
    const auto data = load_category(path);
    std::printf("%-12s %4s %8s %-22s %4s %s\n", "label", "M", "q", "q (root)", "A", "autoeq");
    auto gs = invertibles(data.ring);
    std::sort(gs.begin(), gs.end(), [&](Index a, Index b) { return data.ring.label(a) < data.ring.label(b); });
    for (Index g : gs) {
        if (g == data.ring.unit()) continue;
        const auto p = profile(data, g);
        std::printf("%-12s %4lld %8s %-22s %4lld %s\n", data.ring.label(g).c_str(), static_cast<long long>(p.M),
                    p.q.str().c_str(), p.q.symbol().c_str(), static_cast<long long>(p.A),
                    exists_autoequivalence(p) ? "yes" : "no");
    }
    return 0;
}

nlohmann::json autoeq_json(const ModularCategoryData& data, const CurrentAutoEq& f)
{
    nlohmann::json j;
    j["category"] = f.category;
    j["g"] = data.ring.label(f.g);
    j["M"] = f.M;
    j["q"] = f.q.str();
    j["zeta"] = f.zeta.str();
    j["A"] = f.A;
    j["braided"] = f.braided;
    j["pivotal"] = f.pivotal;
    j["order_bound"] = f.order_bound;
    j["permutation"] = f.permutation;
    auto moved = nlohmann::json::array();
    for (const auto& [x, y] : moved_objects(f.permutation)) moved.push_back({data.ring.label(x), data.ring.label(y)});
    j["moved"] = std::move(moved);
    j["equals_dual"] = f.permutation == data.ring.dual_permutation();
    return j;
}

void print_autoeq(const ModularCategoryData& data, const CurrentAutoEq& f)
{
    std::cout << "F(" << data.ring.label(f.g) << ", zeta=" << f.zeta.str() << ")  M=" << f.M << " q=" << f.q.str()
              << " A=" << f.A << " braided=" << (f.braided ? "yes" : "no")
              << " pivotal=" << (f.pivotal ? "yes" : "no") << " order_bound=" << f.order_bound << "\n";
    const auto moved = moved_objects(f.permutation);
    if (moved.empty()) std::cout << "  identity on simples\n";
    for (const auto& [x, y] : moved) {
        std::cout << "  " << data.ring.label(x) << (f.permutation[y] == x ? " <-> " : " -> ") << data.ring.label(y)
                  << "\n";
    }
    if (f.permutation == data.ring.dual_permutation()) std::cout << "  equals the duality permutation\n";
}

int cmd_autoeq(const std::string& path, const std::string& label, const std::string& zeta, bool json)
{
    const auto data = load_category(path);
    const Index g = data.index_of(label);
    std::vector<CurrentAutoEq> fs;
    if (!zeta.empty()) {
        fs.push_back(construct_autoeq(data, g, parse_angle(zeta)));
    } else {
        const auto p = profile(data, g);
        if (!exists_autoequivalence(p)) {
            throw MathError("gcd(A+1, M) = " + std::to_string(std::gcd(p.A + 1, p.M)) + " != 1 for " + label +
                            " (A = " + std::to_string(p.A) + ", M = " + std::to_string(p.M) + ")");
        }
        for (const auto& z : admissible_zetas(p)) fs.push_back(construct_autoeq(data, g, z));
    }
    if (json) {
        auto out = nlohmann::json::array();
        for (const auto& f : fs) out.push_back(autoeq_json(data, f));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& f : fs) print_autoeq(data, f);
    }
    return 0;
}

int cmd_group(const std::string& path, const std::vector<std::string>& gens)
{
    const auto data = load_category(path);
    std::vector<CurrentAutoEq> fs;
    for (const auto& spec : gens) {
        const auto colon = spec.rfind(':');
        if (colon == std::string::npos) throw InputError("generator '" + spec + "' must look like LABEL:ANGLE");
        fs.push_back(construct_autoeq(data, data.index_of(spec.substr(0, colon)), parse_angle(spec.substr(colon + 1))));
    }
    const auto G = generated_group(fs, data.size());
    std::cout << "order " << G.elements.size() << ": " << G.isomorphism_type << "\n";
    auto name = [&](const CurrentAutoEq& f) { return "F(" + data.ring.label(f.g) + ", " + f.zeta.str() + ")"; };
    for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
            const auto c = compose(fs[a], fs[b]);
            for (std::size_t k = 0; k < fs.size(); ++k) {
                if (k != a && k != b && fs[k].permutation == c) {
                    std::cout << "note: " << name(fs[a]) << " o " << name(fs[b]) << " matches " << name(fs[k])
                              << " on simples\n";
                }
            }
        }
    }
    std::cout << "caveat: " << G.caveat << "\n";
    return 0;
}

int cmd_reproduce(const std::string& example, const std::string& cache)
{
    const auto report = reproduce(example, as_dir(cache));
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << (report.passed() ? "PASS " : "FAIL ") << report.example << "\n";
    return report.passed() ? 0 : 1;
}

// "--zeta -i" would otherwise be read as an unknown short flag
std::vector<std::string> join_negative_values(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if ((a == "--zeta" || a == "--gen") && i + 1 < argc && argv[i + 1][0] == '-') {
            args.push_back(a + "=" + argv[++i]);
        } else {
            args.push_back(a);
        }
    }
    std::reverse(args.begin(), args.end());
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple-current auto-equivalences of level-k modular categories"};
    app.require_subcommand(1);

    std::string family, out, cache, path, label, zeta, example;
    int rank = 0, level = 0;
    bool json = false;
    std::vector<std::string> gens;

    auto* build = app.add_subcommand("build", "Build a level-k category and write it as JSON");
    build->add_option("family", family, "Lie family A-G")->required();
    build->add_option("rank", rank)->required();
    build->add_option("level", level)->required();
    build->add_option("-o,--out", out, "Output file")->required();
    build->add_option("--cache-dir", cache);

    auto* load = app.add_subcommand("load-check", "Load and validate a category file");
    load->add_option("path", path)->required();

    auto* inv = app.add_subcommand("invertibles", "List non-unit invertible objects");
    inv->add_option("path", path)->required();

    auto* autoeq = app.add_subcommand("autoeq", "Construct simple-current auto-equivalences");
    autoeq->add_option("path", path)->required();
    autoeq->add_option("g", label, "Invertible object")->required();
    autoeq->add_option("--zeta", zeta, "Root of unity, p/q or 1, -1, i, -i");
    autoeq->add_flag("--json", json);

    auto* group = app.add_subcommand("group", "Group generated by auto-equivalences");
    group->add_option("path", path)->required();
    group->add_option("--gen", gens, "LABEL:ANGLE, repeatable");

    auto* repro = app.add_subcommand("reproduce", "Run the golden checks for a worked example");
    repro->add_option("example", example)->required()->check(CLI::IsMember(golden_examples()));
    repro->add_option("--cache-dir", cache);

    try {
        auto args = join_negative_values(argc, argv);
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build) return cmd_build(family, rank, level, out, cache);
        if (*load) return cmd_load_check(path);
        if (*inv) return cmd_invertibles(path);
        if (*autoeq) return cmd_autoeq(path, label, zeta, json);
        if (*group) return cmd_group(path, gens);
        if (*repro) return cmd_reproduce(example, cache);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
