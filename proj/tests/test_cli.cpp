#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = kayles::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

TEST_CASE("sequence") {
  Run r = run({"sequence", "--kind", "fplus", "--n", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n0,*\n1,*\n2,*\n3,*\n4,0\n5,0\n6,1\n7,1\n8,2\n9,0\n");
  r = run({"sequence", "--kind", "rho", "--n", "4"});
  CHECK(ends_with(r.out, "4,0\n"));
  r = run({"sequence", "--kind", "rminus", "--n", "3", "--format", "json"});
  CHECK(r.out == "{\"kind\":\"rminus\",\"values\":[0,1,1,2]}\n");
  r = run({"sequence", "--kind", "octal", "--code", "0.777", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(run({"sequence", "--kind", "bogus", "--n", "4"}).code == 2);
  CHECK(run({"sequence", "--kind", "rho"}).code == 2);
  CHECK(run({"sequence", "--kind", "rho", "--n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("sequence output is stable") {
  const Run a = run({"sequence", "--kind", "fminus", "--n", "300"});
  const Run b = run({"sequence", "--kind", "fminus", "--n", "300"});
  CHECK(a.out == b.out);
}

TEST_CASE("outcome") {
  CHECK(run({"outcome", "--variant", "conj-normal", "--position", "9"}).out == "P (remoteness 4)\n");
  CHECK(run({"outcome", "--variant", "ddc-normal", "--position", "50"}).out.rfind("P", 0) == 0);
  CHECK(run({"outcome", "--variant", "sel-misere", "--position", "8"}).out.rfind("P", 0) == 0);
  CHECK(run({"outcome", "--variant", "conj-normal", "--position", "9,x"}).code == 2);
  CHECK(run({"outcome", "--variant", "nope", "--position", "9"}).code == 2);
  CHECK(run({"outcome", "--variant", "disj-misere", "--position", "40"}).code == 3);
  CHECK(run({"outcome", "--variant", "disj-misere", "--position", "2,2"}).out == "N (oracle)\n");
}

TEST_CASE("best-move") {
  CHECK(run({"best-move", "--variant", "conj-normal", "--position", "18"}).out == "0:6 -> 11,4\n");
  CHECK(run({"best-move", "--variant", "disj-normal", "--position", "4"}).out ==
        "0:1 -> 2 (no winning move)\n");
}

TEST_CASE("play") {
  Run r = run({"play", "--variant", "ddc-normal", "--position", "3"}, "0:2\n");
  CHECK(r.code == 0);
  CHECK(ends_with(r.out, "you win\n"));

  r = run({"play", "--variant", "conj-misere", "--position", "5", "--engine", "first"}, "");
  CHECK(r.out.find("engine plays 0:3") != std::string::npos);

  r = run({"play", "--variant", "disj-normal", "--position", "4,4"}, "0:9\n0:1\n1:1\n0:1\n");
  CHECK(r.out.find("illegal move") != std::string::npos);
  CHECK(ends_with(r.out, "engine wins\n"));

  CHECK(run({"play", "--variant", "disj-misere", "--position", "20"}).code == 3);
  CHECK(run({"play", "--variant", "disj-normal", "--position", "4", "--engine", "third"}).code == 2);
}

TEST_CASE("period-check") {
  Run r = run({"period-check", "--kind", "rho", "--n", "300", "--period", "34", "--preperiod", "52"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("pass", 0) == 0);
  r = run({"period-check", "--kind", "rho", "--n", "300", "--period", "34", "--preperiod", "51"});
  CHECK(r.code == 1);
  CHECK(run({"period-check", "--kind", "rho", "--n", "300"}).out == "period 34 preperiod 52\n");
  CHECK(run({"period-check", "--kind", "fplus", "--n", "699"}).out == "period 84 preperiod 245\n");
  CHECK(run({"period-check", "--kind", "rho", "--n", "100", "--period", "34", "--preperiod", "52"}).code == 3);
  CHECK(run({"period-check", "--kind", "rho", "--n", "300", "--period", "34"}).code == 2);
}

TEST_CASE("losing-set and stats") {
  CHECK(run({"losing-set", "--variant", "ccc-misere", "--n", "100"}).out == "1,2,8,9,22,23,50,51\n");
  CHECK(run({"losing-set", "--variant", "disj-misere", "--n", "10"}).code == 2);
  CHECK(run({"stats", "--n", "10"}).out ==
        "n,NbZ,Max,Mean,Deviation,FreqV,PctFreqV,MaxZ,PosMax\n10,3,4,1.400000,1.080000,0,30.0000,8,9\n");
}

TEST_CASE("audit exit codes") {
  Run clean = run({"audit", "--variant", "conj-misere", "--bound", "10"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("# discrepancies,0") != std::string::npos);
  // Uncertified calculi report but do not fail.
  CHECK(run({"audit", "--variant", "sel-misere", "--bound", "8"}).code == 0);
  CHECK(run({"audit", "--variant", "all", "--bound", "8"}).code == 0);
  Run sel = run({"audit", "--variant", "all", "--bound", "10", "--selective-report"});
  CHECK(sel.out.find("\"1,1\",P,N,N,sel-misere") != std::string::npos);
  CHECK(run({"audit", "--variant", "disj-misere", "--bound", "8"}).code == 2);
}
