// Emits the configuration JSON for a regular N-gon (vertices zeta^k - 1,
// special piece at the origin). Usage: make_ngon N [out.json]
#include <cstdlib>
#include <iostream>
#include <string>

#include "hopper/io.hpp"

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: make_ngon N [out.json]\n";
        return 2;
    }
    int N = 0;
    try {
        N = std::stoi(argv[1]);
    } catch (const std::exception&) {
        std::cerr << "make_ngon: N must be an integer\n";
        return 2;
    }
    if (N < 3) {
        std::cerr << "make_ngon: need N >= 3\n";
        return 2;
    }
    const std::string json = hopper::config_to_json(hopper::Configuration::regular_ngon(N));
    if (argc == 3)
        hopper::write_text_file_atomic(argv[2], json);
    else
        std::cout << json;
    return 0;
}
