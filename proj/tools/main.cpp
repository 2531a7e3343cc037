#include "chartfold/cli.hpp"

int main(int argc, char** argv) { return chartfold::run_cli(argc, argv); }
