#include "wmin/rootsys.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for minimal W-algebra simplicity"};
    app.require_subcommand(1);
    // Subcommands are wired up as the library grows; placeholder during bring-up.
    auto* info = app.add_subcommand("info", "root datum report");
    std::string algebra;
    info->add_option("--algebra", algebra, "algebra id")->required();
    CLI11_PARSE(app, argc, argv);
    nlohmann::json out;
    out["status"] = "error";
    out["reason"] = "not yet implemented";
    std::cout << out.dump(2) << std::endl;
    return 1;
}
