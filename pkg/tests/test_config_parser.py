"""Unit tests for the job file parser"""

from fractions import Fraction

import pytest

from weightdirac.core.config_parser import parse_config, render_config
from weightdirac.core.errors import ConfigError

VALID = """\
# M(0) against L(0)
[algebra]
type = A1

[module M]
kind = verma
lambda = [0]

[module L]
kind = simple_hw
lambda = [0]

[window]
base = [0]
radius = 4

[command]
module = M
second = L
"""


class TestParseValid:
    """Tests for well-formed job files"""

    def test_sections(self):
        """Test that every section lands in the validated config"""
        config = parse_config(VALID)
        assert config.algebra.type == "A1"
        assert config.parabolic.levi == []
        assert list(config.modules) == ["M", "L"]
        assert config.modules["M"].lambda_ == [Fraction(0)]
        assert config.window.radius == 4
        assert config.command.second == "L"

    def test_rationals_and_nested_lists(self):
        """Test p/q tokens and lists of root coordinates"""
        config = parse_config(
            """\
[algebra]
type = A2
[parabolic]
levi = [1]
[module F]
kind = levi_cuspidal
root = 1
mu0 = 1/2
mu1 = -1/3
[module T]
kind = twist-of
of = F
gamma = [[1, 0]]
x = [1/2]
[window]
base = [0, 1/2]
radius = 2
"""
        )
        assert config.modules["F"].mu1 == Fraction(-1, 3)
        assert config.modules["T"].gamma == [[Fraction(1), Fraction(0)]]
        assert config.window.base == [Fraction(0), Fraction(1, 2)]
        assert config.parabolic.levi == [1]

    def test_comments_and_blank_lines(self):
        """Test that trailing comments and indentation are ignored"""
        text = VALID.replace("radius = 4", "   radius = 4   # box size")
        assert parse_config(text).window.radius == 4

    def test_render_round_trip(self):
        """Test that rendering and re-parsing gives the same config"""
        config = parse_config(VALID)
        assert parse_config(render_config(config)) == config


class TestParseErrors:
    """Tests for diagnostics with line and column"""

    def test_unknown_section(self):
        """Test that an unknown section header is rejected with its line"""
        with pytest.raises(ConfigError) as exc_info:
            parse_config("[algebra]\ntype = A1\n[weights]\n")
        assert exc_info.value.line == 3
        assert exc_info.value.column == 1

    def test_key_outside_section(self):
        """Test that keys before the first section are rejected"""
        with pytest.raises(ConfigError) as exc_info:
            parse_config("type = A1\n")
        assert exc_info.value.line == 1

    def test_missing_equals(self):
        """Test that a key without '=' is reported after the key"""
        with pytest.raises(ConfigError) as exc_info:
            parse_config("[algebra]\ntype A1\n")
        assert exc_info.value.line == 2
        assert exc_info.value.column == 5

    def test_unterminated_list(self):
        """Test that an unterminated list is reported"""
        with pytest.raises(ConfigError) as exc_info:
            parse_config("[window]\nbase = [0, 1\n")
        assert "unterminated" in exc_info.value.detail
        assert exc_info.value.line == 2

    def test_malformed_rational(self):
        """Test that a malformed rational points at its key"""
        text = VALID.replace("lambda = [0]\n\n[module L]", "lambda = [1/0]\n\n[module L]")
        with pytest.raises(ConfigError) as exc_info:
            parse_config(text)
        assert exc_info.value.line == 7

    def test_duplicate_module(self):
        """Test that a module name may be defined once"""
        text = VALID.replace("[module L]", "[module M]")
        with pytest.raises(ConfigError, match="defined twice"):
            parse_config(text)

    def test_repeated_key(self):
        """Test that repeated keys are rejected"""
        with pytest.raises(ConfigError, match="repeated"):
            parse_config("[window]\nradius = 1\nradius = 2\n")

    def test_key_not_allowed_for_kind(self):
        """Test that module keys are checked against the constructor"""
        text = VALID.replace("kind = verma\nlambda = [0]", "kind = verma\nlambda = [0]\nmu0 = 1/2")
        with pytest.raises(ConfigError, match="not allowed"):
            parse_config(text)

    def test_missing_required_key(self):
        """Test that a missing constructor key is named"""
        text = VALID.replace("kind = simple_hw\nlambda = [0]", "kind = simple_hw")
        with pytest.raises(ConfigError, match="lambda"):
            parse_config(text)

    def test_unknown_reference(self):
        """Test that command references must name a module"""
        text = VALID.replace("second = L", "second = N")
        with pytest.raises(ConfigError, match="unknown module"):
            parse_config(text)

    def test_self_referencing_module(self):
        """Test that cyclic module definitions are rejected"""
        text = VALID.replace("kind = simple_hw\nlambda = [0]", "kind = dual-of\nof = L")
        with pytest.raises(ConfigError, match="itself"):
            parse_config(text)

    def test_missing_window(self):
        """Test that the window section is required"""
        with pytest.raises(ConfigError, match="window"):
            parse_config("[algebra]\ntype = A1\n")

    def test_radius_must_be_positive(self):
        """Test that radius 0 is rejected"""
        with pytest.raises(ConfigError, match="radius"):
            parse_config(VALID.replace("radius = 4", "radius = 0"))

    def test_error_response(self):
        """Test that config errors render as an ErrorResponse with exit code 1"""
        with pytest.raises(ConfigError) as exc_info:
            parse_config("[bogus]\n")
        response = exc_info.value.to_response()
        assert response.error_code == "CONFIG_ERROR"
        assert response.exit_code == 1
        assert response.metadata == {"line": "1", "column": "1"}
