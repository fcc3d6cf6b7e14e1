#include "dartbound/cli.hpp"

int main(int argc, char** argv) { return dartbound::run(argc, argv); }
