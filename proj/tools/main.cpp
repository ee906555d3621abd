#include "commands.hpp"

int main(int argc, char** argv) { return dslv::cli::run(argc, argv); }
