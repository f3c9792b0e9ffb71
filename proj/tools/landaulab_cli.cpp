// Command-line front end: one subcommand per runner task, artifacts on disk.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <landaulab/errors.hpp>
#include <landaulab/runner.hpp>
#include <landaulab/version.hpp>

namespace fs = std::filesystem;

namespace {

struct TaskArgs {
    std::string config;
    std::string out = ".";
    int threads = 1;
    std::optional<unsigned> seed;
};

int run_one(const std::string& task, const TaskArgs& args) {
    std::ifstream in(args.config, std::ios::binary);
    if (!in) {
        std::cerr << "config error: cannot read '" << args.config << "'\n";
        return 3;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    landaulab::RunResult res;
    try {
        res = landaulab::run_task(task, buf.str(), args.seed);
    } catch (const landaulab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const landaulab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    fs::path dir(args.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << (dir / name).string() << "'\n";
            return false;
        }
        f << text;
        return true;
    };
    if (!write("summary.json", res.summary)) return 2;
    for (const auto& a : res.artifacts)
        if (!write(a.name, a.contents)) return 2;

    const auto summary = nlohmann::ordered_json::parse(res.summary);
    for (const auto& chk : summary["checks"])
        std::printf("[%s] %s\n", chk["pass"].get<bool>() ? "PASS" : "FAIL",
                    chk["name"].get<std::string>().c_str());
    if (summary.contains("error"))
        std::printf("error: %s\n", summary["error"].get<std::string>().c_str());
    std::printf("%s: %s\n", task.c_str(), res.pass ? "PASS" : "FAIL");
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"landaulab: spectral estimates for the Landau Hamiltonian, checked at desk scale"};
    app.set_version_flag("--version", std::string(landaulab::version()));
    app.require_subcommand(1);

    TaskArgs args;
    std::string chosen;
    for (const std::string& task : landaulab::run_task_names()) {
        CLI::App* sub = app.add_subcommand(task, "run the " + task + " task");
        sub->add_option("--config", args.config, "JSON config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", args.out, "output directory for artifacts");
        sub->add_option("--threads", args.threads, "worker threads (currently 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", args.seed, "override the config seed");
        sub->callback([&chosen, task]() { chosen = task; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    return run_one(chosen, args);
}
