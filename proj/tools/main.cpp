#include "hbpp/bench.hpp"

int main(int argc, char** argv) { return hbpp::cli_main(argc, argv); }
