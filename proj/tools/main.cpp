#include "cyclocrit/cli.hpp"

int main(int argc, char** argv) { return cyclocrit::cli::run(argc, argv); }
