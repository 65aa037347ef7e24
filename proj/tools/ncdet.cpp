#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ncdet/cli.hpp"

int main(int argc, char** argv) {
  ncdet::cli::JobSpec job;
  CLI::App app{"Row, column and double determinants, inverses, solvers and quasideterminants over H(a,b)"};
  app.add_option("command", job.command, "rdet|cdet|mdet|ddet|inverse|solve|quasidet|qsolve|rank|verify")
      ->required();
  app.add_option("--in", job.input, "input .qmat or .qsys file");
  app.add_option("-i", job.i, "row index for rdet (1-based)");
  app.add_option("-j", job.j, "column index for cdet (1-based)");
  app.add_option("-p", job.p, "row index for quasidet (1-based)");
  app.add_option("-q", job.q, "column index for quasidet (1-based)");
  app.add_option("--side", job.side, "right|left; must match the system file");
  app.add_option("--method", job.method, "cramer|inverse|quasi")->capture_default_str();
  app.add_option("--parallel", job.parallel, "worker threads for permutation sums")->capture_default_str();
  app.add_option("--out", job.output, "write the output document here instead of stdout");
  app.add_option("--scale", job.scale, "verify scale: small|full")->capture_default_str();
  app.add_option("--repro-dir", job.repro_dir, "directory for verify reproducer files")->capture_default_str();
  app.add_flag("--allow-large", job.allow_large, "lift the enumeration order bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ncdet::cli::Exit::usage;
  }

  ncdet::cli::RunResult r = ncdet::cli::run(job);
  if (job.output) {
    std::ofstream out(*job.output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << *job.output << "'\n";
      return ncdet::cli::Exit::usage;
    }
    out << r.document;
  } else {
    std::cout << r.document;
  }
  return r.exit_code;
}
