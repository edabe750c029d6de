from girthroot.main import main_entry

main_entry()
