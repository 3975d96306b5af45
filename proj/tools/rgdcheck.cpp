#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rgd/errors.hpp"
#include "rgd/report.hpp"

int main(int argc, char** argv) {
  rgd::RunConfig cfg;
  std::string suites;
  std::string out;

  CLI::App app{"Verify RGD axioms for affine root groups of matrix models over Q[t, 1/t]"};
  app.add_option("--group", cfg.group, "sl or su");
  app.add_option("--rank", cfg.rank, "rank of SL_(rank+1)");
  app.add_option("--dim", cfg.dim, "dimension of the hermitian space");
  app.add_option("--witt", cfg.witt, "Witt index");
  app.add_option("--disc", cfg.disc, "squarefree d with k' = Q(sqrt(d))");
  app.add_option("--level-min", cfg.level_min, "lowest level");
  app.add_option("--level-max", cfg.level_max, "highest level");
  app.add_option("--samples", cfg.samples, "coefficient samples per generator");
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--suites", suites, "comma separated: rgd0..rgd5,coroot,q2,comb");
  app.add_option("--format", cfg.format, "json or md");
  app.add_option("--out", out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::stringstream ss(suites);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) cfg.suites.push_back(tok);
  if (!out.empty()) cfg.out = out;

  try {
    rgd::RunResult res = rgd::run(cfg);
    if (cfg.out) {
      std::ofstream f(*cfg.out);
      if (!f) {
        std::cerr << "error: cannot write " << *cfg.out << "\n";
        return 2;
      }
      f << res.text;
    } else {
      std::cout << res.text;
    }
    return res.exit_code;
  } catch (const rgd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
