#include <iostream>

#include "command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  troplift::cli::CommandResult result = troplift::cli::run_command(args);
  if (!result.text.empty())
    std::cout << result.text << "\n";
  else
    std::cout << result.document.dump(2) << "\n";
  return result.exit_code;
}
