#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gma/parse.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gma - rational multiplicative group actions and semisimple derivations"};
    std::string path;
    app.add_option("session", path, "session file to run")->required();
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        gma::RunResult r = gma::run_session_text(buf.str());
        std::cout << r.output;
        return r.exit_code;
    } catch (const gma::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
