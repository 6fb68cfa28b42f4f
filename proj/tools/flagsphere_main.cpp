#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagsphere/canonical.hpp"
#include "flagsphere/enumerate.hpp"
#include "flagsphere/errors.hpp"
#include "flagsphere/expr.hpp"
#include "flagsphere/gamma.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/io.hpp"
#include "flagsphere/structure.hpp"
#include "flagsphere/verify.hpp"

namespace fs = std::filesystem;
using namespace flagsphere;

namespace {

struct Options {
    std::string format = "json";
    std::string field = "gf2";
    std::string out;

    Field field_value() const { return field == "q" ? Field::Rational : Field::GF2; }

    std::ostream& stream(std::ofstream& file) const {
        if (out.empty()) return std::cout;
        file.open(out);
        if (!file) throw Error("cannot open output file: " + out);
        return file;
    }
};

SimplicialComplex load_input(const std::string& input) {
    if (fs::exists(input)) return read_facet_file(input).complex;
    return eval_expr(input);
}

std::string cache_dir() {
    const char* env = std::getenv("FLAGSPHERE_CACHE");
    return env ? std::string(env) : std::string();
}

std::vector<CensusEntry> enumerate_cached(const EnumerationTask& task) {
    const std::string dir = cache_dir();
    if (dir.empty()) return enumerate_flag_spheres(task);

    std::ostringstream name;
    name << "census_n" << task.n;
    if (task.dim_filter) name << "_d" << *task.dim_filter;
    name << "_" << field_name(task.field) << "_s" << task.shard_index << "of" << task.shard_count << ".ndjson";
    const fs::path file = fs::path(dir) / name.str();
    const fs::path done = file.string() + ".done";

    if (fs::exists(done)) {
        std::vector<CensusEntry> out;
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) out.push_back(census_entry_from_ndjson(line));
        return out;
    }

    auto entries = enumerate_flag_spheres(task);
    fs::create_directories(file.parent_path());
    {
        std::ofstream out_file(file);
        for (const auto& e : entries) out_file << census_entry_to_ndjson(e) << "\n";
    }
    std::ofstream(done) << "ok\n";
    return entries;
}

nlohmann::ordered_json check_json(const SimplicialComplex& c, Field field) {
    nlohmann::ordered_json j;
    j["n"] = c.vertex_count();
    j["d"] = c.dim() + 1;
    j["flag"] = is_flag(c);
    j["pure"] = c.pure();
    j["pseudomanifold"] = is_pseudomanifold(c);
    const bool sphere = is_homology_sphere(c, field);
    j["homology_sphere"] = sphere;
    j["homology_ball"] = is_homology_ball(c, field);
    if (sphere) j["gamma"] = to_json(gamma_of(c));
    return j;
}

int cmd_gamma(const Options& opt, const std::string& input) {
    const auto rep = gamma_report(load_input(input));
    std::ofstream file;
    auto& os = opt.stream(file);
    if (opt.format == "text") {
        os << "d=" << rep.d << " f=" << rep.f.str() << " h=" << rep.h.str() << " gamma=" << rep.gamma.str()
           << " alpha=" << rep.alpha << " palindromic=" << (rep.palindromic ? "true" : "false") << "\n";
    } else {
        os << to_json(rep).dump() << "\n";
    }
    return 0;
}

int cmd_check(const Options& opt, const std::string& input) {
    const auto c = load_input(input);
    const auto j = check_json(c, opt.field_value());
    std::ofstream file;
    auto& os = opt.stream(file);
    if (opt.format == "text") {
        for (const auto& [k, v] : j.items()) os << k << ": " << v.dump() << "\n";
    } else {
        os << j.dump() << "\n";
    }
    return 0;
}

int cmd_equators(const Options& opt, const std::string& input) {
    const auto c = load_input(input);
    const auto eqs = find_equators(c, opt.field_value());
    std::ofstream file;
    auto& os = opt.stream(file);
    if (opt.format == "text") {
        for (Face s : eqs) os << s.str() << "\n";
    } else {
        nlohmann::ordered_json j;
        j["n"] = c.vertex_count();
        j["count"] = eqs.size();
        auto list = nlohmann::ordered_json::array();
        for (Face s : eqs) list.push_back(s.vertices());
        j["equators"] = std::move(list);
        os << j.dump() << "\n";
    }
    return 0;
}

int cmd_transform(const Options& opt, const std::string& expr_text) {
    const auto c = eval_expr(expr_text);
    std::ofstream file;
    auto& os = opt.stream(file);
    write_facet_file(os, c);
    return 0;
}

int cmd_enumerate(const Options& opt, int n, std::optional<int> dim, const std::string& shards, int max_n) {
    EnumerationTask task;
    task.n = n;
    task.dim_filter = dim;
    task.field = opt.field_value();
    task.cap = max_n;
    if (!shards.empty()) {
        const auto slash = shards.find('/');
        if (slash == std::string::npos) throw CLI::ValidationError("--shards expects i/k");
        task.shard_index = std::stoi(shards.substr(0, slash));
        task.shard_count = std::stoi(shards.substr(slash + 1));
    }
    const auto entries = enumerate_cached(task);
    std::ofstream file;
    auto& os = opt.stream(file);
    for (const auto& e : entries) os << census_entry_to_ndjson(e) << "\n";
    return 0;
}

std::vector<CorpusItem> corpus_from_source(const std::string& sources, Field field) {
    std::vector<CorpusItem> corpus;
    std::stringstream ss(sources);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.rfind("census:n<=", 0) == 0) {
            const int max_n = std::stoi(part.substr(10));
            for (int n = 2; n <= max_n; ++n) {
                EnumerationTask task;
                task.n = n;
                task.field = field;
                int idx = 0;
                for (auto& e : enumerate_cached(task))
                    corpus.push_back({"census/n" + std::to_string(n) + "/" + std::to_string(idx++), std::move(e.complex)});
            }
        } else if (part.rfind("constructed:n<=", 0) == 0) {
            for (auto& item : constructed_corpus(std::stoi(part.substr(15)))) corpus.push_back(std::move(item));
        } else if (part == "constructed") {
            for (auto& item : constructed_corpus()) corpus.push_back(std::move(item));
        } else if (part.rfind("expr:", 0) == 0) {
            corpus.push_back({part.substr(5), eval_expr(part.substr(5))});
        } else if (part.rfind("file:", 0) == 0) {
            corpus.push_back({part.substr(5), read_facet_file(part.substr(5)).complex});
        } else {
            throw CLI::ValidationError("unknown --source '" + part + "'");
        }
        // census and constructed items come pre-certified; user inputs do not
        if (!corpus.empty() && (part.rfind("expr:", 0) == 0 || part.rfind("file:", 0) == 0)) {
            const auto& item = corpus.back();
            if (!is_flag(item.complex) || !is_homology_sphere(item.complex, field))
                throw Error("corpus item '" + item.name + "' is not a flag homology sphere");
        }
    }
    return corpus;
}

int cmd_verify(const Options& opt, const std::string& suites, const std::string& source) {
    const Field field = opt.field_value();
    const auto corpus = corpus_from_source(source, field);

    std::vector<std::string> ids;
    if (suites == "all") {
        ids = suite_ids();
    } else {
        std::stringstream ss(suites);
        std::string part;
        while (std::getline(ss, part, ',')) ids.push_back(part);
    }

    bool all_pass = true;
    auto reports = nlohmann::ordered_json::array();
    std::vector<std::string> counterexamples;
    for (const auto& id : ids) {
        const auto result = run_suite(id, corpus, field);
        all_pass = all_pass && result.pass();
        if (opt.format == "text" || opt.out.empty()) {
            std::cout << "suite " << result.suite << ": " << (result.pass() ? "PASS" : "FAIL") << " (checked "
                      << result.checked << ")\n";
            for (const auto& f : result.failures) std::cout << "  counterexample: " << f << "\n";
            for (const auto& note : result.notes) std::cout << "  note: " << note << "\n";
        }
        nlohmann::ordered_json j;
        j["suite"] = result.suite;
        j["checked"] = result.checked;
        j["pass"] = result.pass();
        j["report_only"] = result.report_only;
        j["failures"] = result.failures;
        j["notes"] = result.notes;
        reports.push_back(std::move(j));
        for (const auto& f : result.failures) counterexamples.push_back(result.suite + ": " + f);
    }
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        if (!file) throw Error("cannot open output file: " + opt.out);
        file << reports.dump(2) << "\n";
    }
    if (!all_pass && opt.out.empty()) {
        const std::string path = "flagsphere_counterexamples.txt";
        std::ofstream file(path);
        for (const auto& line : counterexamples) file << line << "\n";
        std::cerr << "counterexamples written to " << path << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag homology sphere toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--field", opt.field, "homology coefficient field")->check(CLI::IsMember({"gf2", "q"}));
    app.add_option("--out", opt.out, "write output to a file");

    std::string input, shards, suites = "all", source = "constructed";
    int n = 0, max_n = 12;
    std::optional<int> dim;

    auto* gamma_cmd = app.add_subcommand("gamma", "f/h/gamma report for an expression or facet file");
    gamma_cmd->add_option("input", input, "DSL expression or facet file path")->required();

    auto* check_cmd = app.add_subcommand("check", "flagness, pseudomanifold, sphere and ball certification");
    check_cmd->add_option("input", input, "DSL expression or facet file path");
    check_cmd->add_option("--expr", input, "DSL expression");
    check_cmd->add_option("--file", input, "facet file path");

    auto* eq_cmd = app.add_subcommand("equators", "exhaustive equator scan");
    eq_cmd->add_option("input", input, "DSL expression or facet file path")->required();

    auto* tr_cmd = app.add_subcommand("transform", "evaluate a DSL expression to a facet file");
    tr_cmd->add_option("expr", input, "DSL expression")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "census of flag homology spheres on n vertices");
    enum_cmd->add_option("n", n, "vertex count")->required();
    enum_cmd->add_option("--dim", dim, "restrict to sphere dimension");
    enum_cmd->add_option("--shards", shards, "shard spec i/k");
    enum_cmd->add_option("--max-n", max_n, "enumeration cap");

    auto* verify_cmd = app.add_subcommand("verify", "run theorem suites over a corpus");
    verify_cmd->add_option("--suite", suites, "suite id list or 'all'");
    verify_cmd->add_option("--source", source, "census:n<=K, constructed[:n<=K], expr:E, file:P (comma separated)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (gamma_cmd->parsed()) return cmd_gamma(opt, input);
        if (check_cmd->parsed()) {
            if (input.empty()) throw CLI::ValidationError("check needs an input");
            return cmd_check(opt, input);
        }
        if (eq_cmd->parsed()) return cmd_equators(opt, input);
        if (tr_cmd->parsed()) return cmd_transform(opt, input);
        if (enum_cmd->parsed()) return cmd_enumerate(opt, n, dim, shards, max_n);
        if (verify_cmd->parsed()) return cmd_verify(opt, suites, source);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
