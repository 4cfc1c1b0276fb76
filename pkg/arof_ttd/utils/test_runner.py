import pytest

# pytest flags for the Django verbosity levels, level 1 is pytest's default output
VERBOSITY_FLAGS = {
    0: ["--quiet"],
    2: ["--verbose"],
    3: ["-vv"],
}


class PytestTestRunner:
    """
    Run the simulator suite with pytest.
    Takes the options of Django's `test` command and translates them to pytest flags.
    """

    def __init__(self, verbosity=1, failfast=False, show_local=False, keyword=None):
        self.verbosity = verbosity
        self.failfast = failfast
        self.show_local = show_local
        self.keyword = keyword

    def build_argv(self, test_labels, ignore_labels=()) -> list[str]:
        argv = list(VERBOSITY_FLAGS.get(self.verbosity, []))
        if self.failfast:
            argv.append("--exitfirst")
        if self.show_local:
            argv.append("--showlocals")
        if self.keyword:
            argv.extend(["-k", self.keyword])
        for ignore_label in ignore_labels:
            argv.extend(["--ignore", ignore_label])
        argv.extend(test_labels)
        return argv

    def run_tests(self, test_labels, ignore_labels=()) -> int:
        """
        Return the pytest exit status, 0 when every selected test passed.
        """
        return int(pytest.main(self.build_argv(test_labels, ignore_labels)))
