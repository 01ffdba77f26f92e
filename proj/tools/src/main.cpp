#include "mthv_cli/cli.hpp"

int main(int argc, char** argv) { return mthv::cli::run(argc, argv); }
