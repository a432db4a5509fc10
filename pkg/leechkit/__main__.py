from leechkit.cli import main

main(prog_name="leechkit")
