#include "dioph/cli.hpp"

int main(int argc, char** argv) { return dioph::cli::run(argc, argv); }
