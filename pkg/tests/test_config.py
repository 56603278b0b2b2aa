"""
Unit tests for configuration module.
"""
import shutil
import tempfile
from pathlib import Path

import pytest
import yaml

from tvgnet.core.config import RunConfig, get_config_template, load_config
from tvgnet.core.errors import ConfigError


class TestRunConfig:
    """Test cases for RunConfig class."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.mkdtemp()
        self.config_path = Path(self.temp_dir) / "test_config.yaml"

    def teardown_method(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_config_defaults(self):
        """Test default configuration values."""
        config = RunConfig()

        assert config.inputs == []
        assert config.input_format == "canonical"
        assert config.count_self_citations is True
        assert config.weight_event_time == "citing"
        assert config.threshold == 0
        assert config.step == 365
        assert config.community_step == 182
        assert config.cumulative is True
        assert config.resolution == 1.0
        assert config.workers == 1
        assert config.out_dir == Path("out")
        config.validate()

    def test_config_to_yaml(self):
        """Test converting config to YAML."""
        config = RunConfig(inputs=[Path("corpus.jsonl")])
        parsed = yaml.safe_load(config.to_yaml())

        assert parsed["inputs"] == ["corpus.jsonl"]
        assert parsed["out_dir"] == "out"
        assert parsed["step"] == 365

    def test_config_save_and_load(self):
        """Test saving and loading configuration."""
        config = RunConfig(threshold=2, step=30, cumulative=False, resolution=0.5)
        config.save(self.config_path)

        loaded = RunConfig.load(self.config_path)
        assert loaded.threshold == 2
        assert loaded.step == 30
        assert loaded.cumulative is False
        assert loaded.resolution == 0.5

    def test_load_key_value_file(self):
        """Test the key=value file format."""
        path = Path(self.temp_dir) / "run.conf"
        path.write_text("# comment\nthreshold = 3\ncumulative=false  # inline\n"
                        "inputs=a.txt,b.txt\ninput_format=snap\n", encoding="utf-8")

        config = RunConfig.load(path)
        assert config.threshold == 3
        assert config.cumulative is False
        assert config.inputs == [Path("a.txt"), Path("b.txt")]
        assert config.input_format == "snap"

    def test_key_value_syntax_error(self):
        path = Path(self.temp_dir) / "run.conf"
        path.write_text("threshold 3\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="KEY=VALUE"):
            RunConfig.load(path)

    def test_invalid_yaml(self):
        self.config_path.write_text("step: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            RunConfig.load(self.config_path)

    def test_yaml_must_be_mapping(self):
        self.config_path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="mapping"):
            RunConfig.load(self.config_path)

    def test_missing_file(self):
        with pytest.raises(ConfigError, match="Failed to load"):
            RunConfig.load(Path(self.temp_dir) / "absent.yaml")

    def test_unknown_key_is_ignored(self):
        config = RunConfig().apply_overrides({"colour": "blue", "step": 7})
        assert config.step == 7

    def test_bad_value_type(self):
        with pytest.raises(ConfigError, match="step"):
            RunConfig().apply_overrides({"step": "weekly"})
        with pytest.raises(ConfigError, match="cumulative"):
            RunConfig().apply_overrides({"cumulative": "maybe"})
        with pytest.raises(ConfigError, match="threshold"):
            RunConfig().apply_overrides({"threshold": 1.5})

    def test_validation_collects_errors(self):
        config = RunConfig(step=0, threshold=-1, input_format="xml", workers=0)
        with pytest.raises(ConfigError) as excinfo:
            config.validate()
        message = str(excinfo.value)
        assert "step must be positive" in message
        assert "threshold must be non-negative" in message
        assert "input_format" in message
        assert "workers" in message

    def test_environment_overrides(self):
        config = RunConfig().update_from_env({"TVGNET_STEP": "90", "TVGNET_CUMULATIVE": "no",
                                              "UNRELATED": "1"})
        assert config.step == 90
        assert config.cumulative is False


class TestLoadConfig:
    """Test precedence of configuration sources."""

    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp()
        self.config_path = Path(self.temp_dir) / "run.yaml"
        self.config_path.write_text("step: 30\nthreshold: 1\nresolution: 0.8\n", encoding="utf-8")

    def teardown_method(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_file_env_flag_precedence(self, monkeypatch):
        monkeypatch.setenv("TVGNET_STEP", "60")
        monkeypatch.setenv("TVGNET_THRESHOLD", "2")
        config = load_config(self.config_path, {"threshold": 5, "resolution": None})
        assert config.step == 60          # env over file
        assert config.threshold == 5      # flag over env
        assert config.resolution == 0.8   # None flags are skipped

    def test_env_can_be_disabled(self, monkeypatch):
        monkeypatch.setenv("TVGNET_STEP", "60")
        assert load_config(self.config_path, use_env=False).step == 30

    def test_invalid_result_raises(self):
        with pytest.raises(ConfigError):
            load_config(self.config_path, {"step": -5})

    def test_template_is_valid_config(self):
        path = Path(self.temp_dir) / "template.yaml"
        path.write_text(get_config_template(), encoding="utf-8")
        config = load_config(path, use_env=False)
        assert config == RunConfig()
