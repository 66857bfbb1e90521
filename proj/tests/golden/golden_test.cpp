// Runs the orealg binary on every line of cases.txt and compares its output
// byte for byte with expected/<name>.out (stdout, or stderr when the expected
// exit code is 1). Each case runs twice to check reproducibility.
//
//   golden_test <orealg-binary> <golden-dir> [--update]

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (have) out.push_back(cur);
  return out;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& cmd, const std::string& tmp) {
  Run r;
  const std::string full = cmd + " >" + shell_quote(tmp + ".out") + " 2>" + shell_quote(tmp + ".err");
  const int status = std::system(full.c_str());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(tmp + ".out");
  r.err = slurp(tmp + ".err");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_test <orealg-binary> <golden-dir> [--update]\n";
    return 1;
  }
  const std::string binary = argv[1];
  const std::string dir = argv[2];
  const bool update = argc > 3 && std::string(argv[3]) == "--update";
  const std::string tmp = "golden_tmp";

  std::ifstream cases(dir + "/cases.txt");
  if (!cases) {
    std::cerr << "cannot read " << dir << "/cases.txt\n";
    return 1;
  }
  int failures = 0;
  int count = 0;
  std::string line;
  while (std::getline(cases, line)) {
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (tok.size() < 3) {
      std::cerr << "malformed case: " << line << '\n';
      return 1;
    }
    const std::string& name = tok[0];
    const int expected_code = std::stoi(tok[1]);
    std::string cmd = shell_quote(binary);
    bool text = false;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] == "--text") {
        text = true;
        continue;
      }
      std::string arg = tok[i];
      if (arg.ends_with(".session")) arg = dir + "/" + arg;
      cmd += " " + shell_quote(arg);
    }
    if (!text) cmd += " --json";

    const Run first = run(cmd, tmp);
    const Run second = run(cmd, tmp);
    const std::string& produced = expected_code == 1 ? first.err : first.out;
    const std::string path = dir + "/expected/" + name + ".out";
    ++count;
    if (update) {
      std::ofstream(path, std::ios::binary) << produced;
    }
    const std::string expected = slurp(path);
    bool ok = true;
    if (first.code != expected_code) {
      std::cerr << name << ": exit code " << first.code << ", expected " << expected_code << '\n';
      ok = false;
    }
    if (produced != expected) {
      std::cerr << name << ": output differs from " << path << "\n--- got\n" << produced << "--- expected\n"
                << expected;
      ok = false;
    }
    if (first.out != second.out || first.err != second.err || first.code != second.code) {
      std::cerr << name << ": second run differs\n";
      ok = false;
    }
    if (!ok) ++failures;
    std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
  }
  std::remove((tmp + ".out").c_str());
  std::remove((tmp + ".err").c_str());
  std::cout << count - failures << "/" << count << " golden cases passed\n";
  return failures == 0 ? 0 : 1;
}
