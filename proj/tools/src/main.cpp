#include "app.hpp"

int main(int argc, char** argv) { return qbos::cli::run_main(argc, argv); }
