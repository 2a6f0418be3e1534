// cuspcoeff command line tool; subcommands are wired up in cli.cpp-style
// blocks below as the library grows.

#include <cstdio>

#include "CLI11.hpp"
#include "cuspcoeff/cusps.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Fourier coefficients of newforms at the cusps of Gamma_0(N)"};
    app.require_subcommand(1);

    cuspcoeff::i64 level = 1;
    auto* cusps_cmd = app.add_subcommand("cusps", "list cusp data for a level");
    cusps_cmd->add_option("--level", level, "level N")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cusps_cmd->parsed()) {
        for (auto& c : cuspcoeff::enumerate_cusps(level))
            std::printf("%s q=%lld d=%lld\n", c.str().c_str(), c.q, c.d_class);
    }
    return 0;
}
