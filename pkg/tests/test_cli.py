import zipfile
from pathlib import Path

import pytest
from click.testing import CliRunner

from athos_forge.cli import main
from athos_forge.codegen import CodegenOptions, generate_csharp
from athos_forge.document import FormDocument, parse_form, serialize_form
from athos_forge.docx import DocxOptions, generate_docx
from athos_forge.model import FormSpec, default_registry
from athos_forge.svg import RenderOptions, render_svg

from conftest import FIXTURES, PNG_1X1

CORPUS = FIXTURES / "corpus"


@pytest.fixture()
def runner():
    return CliRunner()


def corpus_files(sub: str) -> list[Path]:
    files = sorted((CORPUS / sub).glob("*.athos.json"))
    assert files, f"corpus dir {sub} is empty"
    return files


class TestNew:
    def test_writes_canonical_empty_form(self, runner, tmp_path):
        out = tmp_path / "My.athos.json"
        result = runner.invoke(main, ["new", "MyForm", "-o", str(out)])
        assert result.exit_code == 0
        expected = serialize_form(FormDocument(1, FormSpec("MyForm", "MyForm", 600, 400)))
        assert out.read_bytes() == expected

    def test_default_output_name(self, runner, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert runner.invoke(main, ["new", "Billing"]).exit_code == 0
        assert (tmp_path / "Billing.athos.json").exists()

    def test_invalid_name_exits_2(self, runner, tmp_path):
        result = runner.invoke(main, ["new", "class", "-o", str(tmp_path / "x.json")])
        assert result.exit_code == 2
        assert "E_RESERVED_WORD" in result.output


class TestValidate:
    def test_valid_fixture_exit_0_silent(self, runner):
        result = runner.invoke(main, ["validate", str(FIXTURES / "sample.athos.json")])
        assert result.exit_code == 0
        assert result.output == ""

    def test_duplicate_names_exit_2_with_line(self, runner):
        result = runner.invoke(main, ["validate",
                                      str(CORPUS / "invalid" / "dup_names.athos.json")])
        assert result.exit_code == 2
        assert "ERROR E_DUP_NAME" in result.output
        assert "controls/1/name" in result.output

    def test_warnings_print_but_exit_0(self, runner):
        result = runner.invoke(main, ["validate",
                                      str(CORPUS / "ok" / "warnings_only.athos.json")])
        assert result.exit_code == 0
        assert "WARNING W_OUT_OF_BOUNDS" in result.output

    def test_parse_error_exit_1_stderr(self, runner):
        result = runner.invoke(main, ["validate",
                                      str(CORPUS / "parse_error" / "truncated.athos.json")])
        assert result.exit_code == 1

    def test_missing_file_exit_1(self, runner, tmp_path):
        result = runner.invoke(main, ["validate", str(tmp_path / "nope.athos.json")])
        assert result.exit_code == 1

    @pytest.mark.parametrize("sub,expected", [("ok", 0), ("invalid", 2), ("parse_error", 1)])
    def test_exit_code_contract_over_corpus(self, runner, sub, expected):
        for path in corpus_files(sub):
            result = runner.invoke(main, ["validate", str(path)])
            assert result.exit_code == expected, f"{path.name}: {result.output}"


class TestGenCs:
    def test_output_matches_golden(self, runner, tmp_path):
        out = tmp_path / "MainForm.cs"
        result = runner.invoke(main, ["gen-cs", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out)])
        assert result.exit_code == 0
        assert out.read_bytes() == (FIXTURES / "sample.cs").read_bytes()

    def test_default_output_is_form_name(self, runner, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        result = runner.invoke(main, ["gen-cs", str(FIXTURES / "sample.athos.json")])
        assert result.exit_code == 0
        assert (tmp_path / "MainForm.cs").exists()

    def test_namespace_and_no_comments_flags(self, runner, tmp_path):
        out = tmp_path / "out.cs"
        result = runner.invoke(main, ["gen-cs", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out), "--namespace", "Acme.UI",
                                      "--no-comments"])
        assert result.exit_code == 0
        content = out.read_text()
        assert "namespace Acme.UI" in content
        assert "Saves the record" not in content
        doc = parse_form((FIXTURES / "sample.athos.json").read_bytes())
        expected = generate_csharp(doc.form, default_registry(),
                                   CodegenOptions("Acme.UI", emit_comments=False))
        assert content == expected.content

    def test_validation_broken_exit_2(self, runner, tmp_path):
        result = runner.invoke(main, ["gen-cs",
                                      str(CORPUS / "invalid" / "dup_names.athos.json"),
                                      "-o", str(tmp_path / "x.cs")])
        assert result.exit_code == 2
        assert not (tmp_path / "x.cs").exists()


class TestRender:
    def test_output_matches_library(self, runner, tmp_path):
        out = tmp_path / "form.svg"
        result = runner.invoke(main, ["render", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out)])
        assert result.exit_code == 0
        assert out.read_bytes() == (FIXTURES / "sample.svg").read_bytes()

    def test_no_badges_flag(self, runner, tmp_path):
        out = tmp_path / "form.svg"
        result = runner.invoke(main, ["render", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out), "--no-badges"])
        assert result.exit_code == 0
        doc = parse_form((FIXTURES / "sample.athos.json").read_bytes())
        expected = render_svg(doc.form, default_registry(), RenderOptions(show_badges=False))
        assert out.read_bytes() == expected


class TestDoc:
    def test_output_matches_library(self, runner, tmp_path):
        out = tmp_path / "form.docx"
        result = runner.invoke(main, ["doc", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out)])
        assert result.exit_code == 0
        doc = parse_form((FIXTURES / "sample.athos.json").read_bytes())
        expected = generate_docx(doc.form, default_registry(), DocxOptions())
        assert out.read_bytes() == expected.bytes

    def test_image_flag_embeds_png(self, runner, tmp_path):
        png = tmp_path / "form.png"
        png.write_bytes(PNG_1X1)
        out = tmp_path / "form.docx"
        result = runner.invoke(main, ["doc", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(out), "--image", str(png)])
        assert result.exit_code == 0
        with zipfile.ZipFile(out) as zf:
            assert "word/media/form.png" in zf.namelist()

    def test_non_png_image_exit_1(self, runner, tmp_path):
        bad = tmp_path / "fake.png"
        bad.write_bytes(b"not a png")
        result = runner.invoke(main, ["doc", str(FIXTURES / "sample.athos.json"),
                                      "-o", str(tmp_path / "x.docx"),
                                      "--image", str(bad)])
        assert result.exit_code == 1
